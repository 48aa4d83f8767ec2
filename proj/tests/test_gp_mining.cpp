#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gpforge/gp_mining.hpp"
#include "gpforge/patterns.hpp"
#include "gpforge/pipeline.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gpforge;
using namespace gpforge::testing;

namespace {

Embedding embed_onto(const LabeledDigraph& pattern, const LabeledDigraph& host,
                     const std::set<VertexId>& image) {
  for (const Embedding& e : all_embeddings(pattern, host, MatchMode::LabelsOnly))
    if (e.image() == image) return e;
  REQUIRE(false);
  return {};
}

}  // namespace

TEST_CASE("natural expansion candidates") {
  LabeledDigraph f1 = make_f1();
  CHECK(natural_expansions(make_out_star(), f1, {1, 2, 3}).empty());

  LabeledDigraph path = make_uniform(4, {{1, 2}, {2, 3}, {3, 4}});
  std::set<VertexId> exp = natural_expansions(make_single_edge(), path, {1, 2});
  CHECK(exp == std::set<VertexId>{3});

  CHECK(natural_expansions(make_single_edge(), path, path.vertexIdSet()).empty());

  LabeledDigraph lone({{1, "n"}}, {});
  CHECK_THROWS_AS(natural_expansions(lone, f1, {1}), InputError);
}

TEST_CASE("growing a seed to its fixpoint") {
  LabeledDigraph f1 = make_f1();
  GpResult gp = grow_gp(embed_onto(make_out_star(), f1, {1, 2, 3}),
                        make_out_star(), f1);
  CHECK(gp.vertexSet == std::set<VertexId>{1, 2, 3});
  CHECK(is_isomorphic(gp.graph, make_ffl(), MatchMode::LabelsOnly));

  LabeledDigraph ffl = make_ffl();
  GpResult still = grow_gp(embed_onto(ffl, ffl, ffl.vertexIdSet()), ffl, ffl);
  CHECK(still.vertexSet == ffl.vertexIdSet());

  LabeledDigraph path = make_uniform(4, {{1, 2}, {2, 3}, {3, 4}});
  GpResult chain = grow_gp(embed_onto(make_single_edge(), path, {1, 2}),
                           make_single_edge(), path);
  CHECK(chain.vertexSet == std::set<VertexId>{1, 2, 3, 4});
}

TEST_CASE("growth result is order independent") {
  LabeledDigraph f1 = make_f1();
  LabeledDigraph core = make_out_star();
  Embedding seed = embed_onto(core, f1, {4, 5, 6});
  GpResult batch = grow_gp(seed, core, f1);
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    GpResult one = grow_gp_ordered(seed, core, f1, [&](const std::vector<VertexId>& c) {
      return c[rng.index(c.size())];
    });
    CHECK(one.vertexSet == batch.vertexSet);
  }
}

TEST_CASE("mining the two-triangle fixture") {
  LabeledDigraph f1 = make_f1();
  std::vector<LabeledDigraph> cores = {make_out_star(), make_in_star()};
  std::vector<GpResult> gps = mine_gps(f1, cores);
  REQUIRE(gps.size() == 2);
  std::set<std::set<VertexId>> sets;
  for (const GpResult& gp : gps) sets.insert(gp.vertexSet);
  CHECK(sets == std::set<std::set<VertexId>>{{1, 2, 3}, {4, 5, 6}});

  CHECK(mine_gps(f1, {}).empty());
  LabeledDigraph labeled({{1, "x"}, {2, "x"}}, {{1, 2, "e", false}});
  CHECK(mine_gps(f1.withoutVertices(f1.vertexIdSet()), cores).empty());
  CHECK(mine_gps(labeled, cores).empty());

  LabeledDigraph lone({{1, "n"}}, {});
  CHECK_THROWS_AS(mine_gps(f1, {lone}), InputError);
}

TEST_CASE("mining a planted fan-and-chain host") {
  // index c=0 links pages 1..3, pages chain 1->2->3
  LabeledDigraph host =
      make_uniform(4, {});
  {
    std::vector<Vertex> vs;
    for (VertexId i = 0; i < 4; ++i) vs.push_back({i, "n"});
    std::vector<Edge> es = {{0, 1, "e", false}, {0, 2, "e", false}, {0, 3, "e", false},
                            {1, 2, "e", false}, {2, 3, "e", false}};
    host = LabeledDigraph(std::move(vs), std::move(es));
  }
  LabeledDigraph core({{0, "n"}, {1, "n"}, {2, "n"}},
                      {{0, 1, "e", false}, {0, 2, "e", false}, {1, 2, "e", false}});
  std::vector<GpResult> gps = mine_gps(host, {core});
  REQUIRE(gps.size() == 1);
  CHECK(gps[0].vertexSet == host.vertexIdSet());
}

TEST_CASE("mined patterns are maximal, induced, and disjoint") {
  Rng rng(71);
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    InstanceConfig cfg;
    cfg.pattern = seed % 2 ? PatternKind::BP1 : PatternKind::BP2;
    cfg.rule = RuleKind::Strong;
    cfg.numGps = 4;
    cfg.randomLinks = 3;
    cfg.seed = seed;
    Instance inst = generate_instance(cfg);
    std::vector<LabeledDigraph> cores = {base_pattern(cfg.pattern)};
    std::vector<GpResult> gps = mine_gps(inst.graph, cores);
    std::set<VertexId> claimed;
    for (const GpResult& gp : gps) {
      CHECK(natural_expansions(cores[0], inst.graph.withoutVertices(claimed), gp.vertexSet)
                .empty());
      CHECK(is_isomorphic(gp.graph, inst.graph.induced(gp.vertexSet),
                          MatchMode::WithFlags));
      for (VertexId v : gp.vertexSet) {
        CHECK_FALSE(claimed.count(v));
        claimed.insert(v);
      }
    }
  }
}

TEST_CASE("mining agrees with the brute-force closure enumerator") {
  // restricted to inputs whose closure family is pairwise disjoint, where
  // the delete-as-you-go strategy provably emits exactly that family
  Rng rng(123);
  int tested = 0;
  for (int t = 0; t < 80 && tested < 15; ++t) {
    LabeledDigraph host = random_graph(rng, 5 + rng.index(5), 0.25);
    LabeledDigraph core = rng.index(2) ? make_out_star() : make_single_edge();
    auto family = oracle::brute_gp_family(core, host);
    std::vector<std::set<VertexId>> fam(family.begin(), family.end());
    bool disjoint = true;
    for (std::size_t i = 0; i < fam.size() && disjoint; ++i)
      for (std::size_t j = i + 1; j < fam.size() && disjoint; ++j)
        for (VertexId v : fam[i])
          if (fam[j].count(v)) {
            disjoint = false;
            break;
          }
    if (!disjoint) continue;
    ++tested;
    std::set<std::set<VertexId>> mined;
    for (const GpResult& gp : mine_gps(host, {core})) mined.insert(gp.vertexSet);
    CHECK(mined == family);
  }
  CHECK(tested >= 8);
}

TEST_CASE("soundness-guarantee report on the fixture") {
  LabeledDigraph f1 = make_f1();
  auto truth = f1_positives();
  MineOutput out = run_pipeline(f1, truth, 3);
  GuaranteeReport both = check_soundness_conditions(f1, truth, truth, out.cores, 3);
  CHECK(both.negSetsEqual);
  CHECK(both.positivesClearNegatives);
  CHECK(both.coresWithinSizeBound);
  CHECK(both.all());

  GuaranteeReport one =
      check_soundness_conditions(f1, {truth[0]}, truth, out.cores, 3);
  CHECK(one.negSetsEqual);

  GuaranteeReport tight = check_soundness_conditions(f1, truth, truth, {make_ffl()}, 2);
  CHECK_FALSE(tight.coresWithinSizeBound);
  CHECK_FALSE(tight.all());
}

TEST_CASE("full pipeline on the fixture") {
  LabeledDigraph f1 = make_f1();
  MineOutput out = run_pipeline(f1, f1_positives(), 3);
  CHECK(out.negatives.size() == 2);
  CHECK(out.lattice.hypotheses.size() == 1);
  CHECK(out.cores.size() == 2);
  REQUIRE(out.gps.size() == 2);
  std::set<std::set<VertexId>> sets;
  for (const GpResult& gp : out.gps) sets.insert(gp.vertexSet);
  CHECK(sets == std::set<std::set<VertexId>>{{1, 2, 3}, {4, 5, 6}});
}
