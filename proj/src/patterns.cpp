#include "gpforge/patterns.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>

#include <json.hpp>

#include "gpforge/match.hpp"

namespace gpforge {

namespace fs = std::filesystem;
using nlohmann::json;

const char* pattern_name(PatternKind p) {
  switch (p) {
    case PatternKind::WP1: return "wp1";
    case PatternKind::WP2: return "wp2";
    case PatternKind::BP1: return "bp1";
    case PatternKind::BP2: return "bp2";
  }
  return "?";
}

const char* rule_name(RuleKind r) {
  switch (r) {
    case RuleKind::Strong: return "strong";
    case RuleKind::Weak: return "weak";
    case RuleKind::Chain: return "chain";
  }
  return "?";
}

PatternKind pattern_from_name(const std::string& s) {
  if (s == "wp1") return PatternKind::WP1;
  if (s == "wp2") return PatternKind::WP2;
  if (s == "bp1") return PatternKind::BP1;
  if (s == "bp2") return PatternKind::BP2;
  throw InputError("unknown pattern '" + s + "' (expected wp1|wp2|bp1|bp2)");
}

RuleKind rule_from_name(const std::string& s) {
  if (s == "strong") return RuleKind::Strong;
  if (s == "weak") return RuleKind::Weak;
  if (s == "chain") return RuleKind::Chain;
  throw InputError("unknown rule '" + s + "' (expected strong|weak|chain)");
}

namespace {

LabeledDigraph makeGraph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& es) {
  std::vector<Vertex> vs;
  for (VertexId i = 0; i < n; ++i) vs.push_back({i, kVertexLabel});
  std::vector<Edge> edges;
  for (auto [s, d] : es) edges.push_back({s, d, kEdgeLabel, false});
  return LabeledDigraph(std::move(vs), std::move(edges));
}

// web article with n content pages: index 0 links every page, pages chain
LabeledDigraph wp1(std::size_t pages) {
  std::vector<std::pair<VertexId, VertexId>> es;
  for (VertexId i = 1; i <= pages; ++i) es.push_back({0, i});
  for (VertexId i = 1; i < pages; ++i) es.push_back({i, i + 1});
  return makeGraph(pages + 1, es);
}

// doubly linked chain of n vertices
LabeledDigraph wp2(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> es;
  for (VertexId i = 0; i + 1 < n; ++i) {
    es.push_back({i, i + 1});
    es.push_back({i + 1, i});
  }
  return makeGraph(n, es);
}

bool isWeb(PatternKind p) { return p == PatternKind::WP1 || p == PatternKind::WP2; }

}  // namespace

LabeledDigraph base_pattern(PatternKind kind) {
  switch (kind) {
    case PatternKind::WP1: return wp1(2);
    case PatternKind::WP2: return wp2(2);
    case PatternKind::BP1: return makeGraph(3, {{0, 1}, {0, 2}, {1, 2}});
    case PatternKind::BP2: return makeGraph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  }
  throw InputError("bad pattern kind");
}

std::vector<std::set<VertexId>> role_orbits(const LabeledDigraph& core) {
  std::size_t n = core.vertexCount();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // automorphisms = embeddings of the graph in itself (size equality makes
  // them bijective and edge-surjective)
  for (const Embedding& aut : all_embeddings(core, core, MatchMode::LabelsOnly)) {
    for (const auto& [a, b] : aut.pairs()) {
      std::size_t ra = find(core.indexOf(a));
      std::size_t rb = find(core.indexOf(b));
      if (ra != rb) parent[ra] = rb;
    }
  }
  std::map<std::size_t, std::set<VertexId>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].insert(core.idOf(i));
  std::vector<std::set<VertexId>> out;
  for (auto& [root, verts] : groups) out.push_back(std::move(verts));
  return out;
}

LabeledDigraph instantiate_gp(PatternKind pattern, RuleKind rule,
                              std::size_t targetVertices, Rng& rng) {
  LabeledDigraph base = base_pattern(pattern);
  if (targetVertices < base.vertexCount())
    throw InputError("target size below base pattern size");
  if (isWeb(pattern) != (rule == RuleKind::Chain))
    throw InputError(std::string("rule '") + rule_name(rule) +
                     "' does not apply to pattern '" + pattern_name(pattern) + "'");

  if (pattern == PatternKind::WP1) return wp1(targetVertices - 1);
  if (pattern == PatternKind::WP2) return wp2(targetVertices);

  LabeledDigraph g = base;
  while (g.vertexCount() < targetVertices) {
    std::vector<std::set<VertexId>> orbits = role_orbits(g);
    const std::set<VertexId>& orbit = orbits[rng.index(orbits.size())];
    VertexId rep = *orbit.begin();
    std::size_t repIdx = g.indexOf(rep);

    std::vector<Edge> repEdges;
    for (const auto& a : g.outArcs(repIdx)) repEdges.push_back(g.edges()[a.edge]);
    for (const auto& a : g.inArcs(repIdx)) repEdges.push_back(g.edges()[a.edge]);

    std::uint64_t mask;
    if (rule == RuleKind::Strong) {
      mask = (std::uint64_t{1} << repEdges.size()) - 1;
    } else {
      mask = 1 + rng.below((std::uint64_t{1} << repEdges.size()) - 1);
    }

    VertexId fresh = 0;
    for (const Vertex& v : g.vertices()) fresh = std::max(fresh, v.id + 1);
    std::vector<Vertex> vs = g.vertices();
    vs.push_back({fresh, kVertexLabel});
    std::vector<Edge> es = g.edges();
    for (std::size_t i = 0; i < repEdges.size(); ++i) {
      if (!(mask & (std::uint64_t{1} << i))) continue;
      Edge e = repEdges[i];
      if (e.src == rep) e.src = fresh; else e.dst = fresh;
      bool dup = false;
      for (const Edge& old : es)
        if (key_of(old) == key_of(e)) dup = true;
      if (!dup) es.push_back(e);
    }
    g = LabeledDigraph(std::move(vs), std::move(es));
  }
  return g;
}

std::size_t effective_size_spread(const InstanceConfig& cfg) {
  if (cfg.sizeSpread != 0) return cfg.sizeSpread;
  return isWeb(cfg.pattern) ? 6 : 1;
}

Instance generate_instance(const InstanceConfig& config) {
  if (config.numGps < 1) throw InputError("numGps must be >= 1");
  Rng rng(config.seed);
  std::size_t baseSize = base_pattern(config.pattern).vertexCount();
  std::size_t spread = effective_size_spread(config);

  std::vector<Vertex> vs;
  std::vector<Edge> es;
  std::vector<std::set<VertexId>> truth;
  VertexId offset = 0;
  for (std::size_t i = 0; i < config.numGps; ++i) {
    std::size_t target = baseSize + rng.index(spread + 1);
    LabeledDigraph gp = instantiate_gp(config.pattern, config.rule, target, rng);
    std::set<VertexId> ids;
    for (const Vertex& v : gp.vertices()) {
      vs.push_back({v.id + offset, v.label});
      ids.insert(v.id + offset);
    }
    for (const Edge& e : gp.edges())
      es.push_back({e.src + offset, e.dst + offset, e.label, false});
    truth.push_back(std::move(ids));
    offset += static_cast<VertexId>(gp.vertexCount());
  }

  // distinct ordered cross-GP pairs
  std::vector<std::size_t> gpOf(offset);
  for (std::size_t i = 0; i < truth.size(); ++i)
    for (VertexId v : truth[i]) gpOf[v] = i;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u < offset; ++u)
    for (VertexId v = 0; v < offset; ++v)
      if (gpOf[u] != gpOf[v]) pairs.emplace_back(u, v);
  if (config.randomLinks > pairs.size())
    throw InputError("randomLinks exceeds the number of distinct cross-GP pairs");
  rng.shuffle(pairs);
  for (std::size_t i = 0; i < config.randomLinks; ++i)
    es.push_back({pairs[i].first, pairs[i].second, kEdgeLabel, false});

  return {LabeledDigraph(std::move(vs), std::move(es)), std::move(truth), config};
}

void write_instance(const Instance& inst, const std::string& dir) {
  fs::create_directories(dir);
  {
    std::ofstream out(fs::path(dir) / "graph.txt");
    out << "# synthetic instance: pattern=" << pattern_name(inst.config.pattern)
        << " rule=" << rule_name(inst.config.rule) << " seed=" << inst.config.seed
        << '\n';
    write_graph_text(out, inst.graph);
  }
  {
    json truth = json::array();
    for (const auto& gp : inst.truth) truth.push_back(gp);
    std::ofstream out(fs::path(dir) / "truth.json");
    out << truth.dump(2) << '\n';
  }
  {
    json cfg = {{"pattern", pattern_name(inst.config.pattern)},
                {"rule", rule_name(inst.config.rule)},
                {"num_gps", inst.config.numGps},
                {"random_links", inst.config.randomLinks},
                {"seed", inst.config.seed},
                {"size_spread", effective_size_spread(inst.config)}};
    std::ofstream out(fs::path(dir) / "config.json");
    out << cfg.dump(2) << '\n';
  }
}

Instance read_instance(const std::string& dir) {
  Instance inst;
  inst.graph = parse_graph_file((fs::path(dir) / "graph.txt").string());
  std::ifstream tin(fs::path(dir) / "truth.json");
  if (!tin) throw InputError("cannot open " + dir + "/truth.json");
  json truth = json::parse(tin);
  for (const auto& gp : truth) {
    std::set<VertexId> ids;
    for (const auto& v : gp) ids.insert(v.get<VertexId>());
    inst.truth.push_back(std::move(ids));
  }
  std::ifstream cin_(fs::path(dir) / "config.json");
  if (cin_) {
    json cfg = json::parse(cin_);
    inst.config.pattern = pattern_from_name(cfg.at("pattern").get<std::string>());
    inst.config.rule = rule_from_name(cfg.at("rule").get<std::string>());
    inst.config.numGps = cfg.at("num_gps").get<std::size_t>();
    inst.config.randomLinks = cfg.at("random_links").get<std::size_t>();
    inst.config.seed = cfg.at("seed").get<std::uint64_t>();
    inst.config.sizeSpread = cfg.value("size_spread", std::size_t{0});
  }
  return inst;
}

}  // namespace gpforge
