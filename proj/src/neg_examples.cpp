#include "gpforge/neg_examples.hpp"

#include <algorithm>

#include "gpforge/match.hpp"
#include "gpforge/subgraph_enum.hpp"

namespace gpforge {

NegativeEdges negative_edges(const LabeledDigraph& g,
                             const std::vector<std::set<VertexId>>& positives) {
  std::set<VertexId> all;
  for (const auto& p : positives) {
    for (VertexId v : p) {
      if (!g.hasVertex(v))
        throw InputError("positive example vertex not in graph: " + std::to_string(v));
      if (!all.insert(v).second)
        throw InputError("positive examples overlap at vertex " + std::to_string(v));
    }
  }

  std::set<EdgeKey> flagged;
  std::vector<Edge> negEdges;
  for (const Edge& e : g.edges()) {
    bool boundary = false;
    for (const auto& p : positives) {
      bool s = p.count(e.src) > 0;
      bool d = p.count(e.dst) > 0;
      if (s != d) {
        boundary = true;
        break;
      }
    }
    if (boundary) {
      flagged.insert(key_of(e));
      Edge fe = e;
      fe.neg = true;
      negEdges.push_back(fe);
    }
  }
  return {std::move(negEdges), g.withFlags(flagged)};
}

std::vector<LabeledDigraph> extract_negative_examples_from(
    const LabeledDigraph& annotated, const std::vector<Edge>& negEdges,
    const std::vector<LabeledDigraph>& positiveGraphs, std::size_t k,
    double sampleFrac, std::uint64_t seed) {
  if (k < 2) throw InputError("negative example size bound must be >= 2");
  if (negEdges.empty()) return {};

  std::vector<LabeledDigraph> pool =
      enumerate_connected_subgraphs(annotated, k, negEdges, sampleFrac, seed);

  // drop candidates that contain a positive example, labels only
  std::erase_if(pool, [&](const LabeledDigraph& p) {
    for (const LabeledDigraph& pos : positiveGraphs)
      if (has_embedding(pos, p, MatchMode::LabelsOnly)) return true;
    return false;
  });

  // keep only the larger of two comparable examples, flags included;
  // isomorphic duplicates were already collapsed to one canonical
  // representative by the enumeration
  std::vector<char> drop(pool.size(), 0);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < pool.size() && !drop[i]; ++j) {
      if (i == j || drop[j]) continue;
      if (is_proper_subgraph_of(pool[i], pool[j], MatchMode::WithFlags)) drop[i] = 1;
    }
  }
  std::vector<LabeledDigraph> out;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (!drop[i]) out.push_back(std::move(pool[i]));
  return out;
}

std::vector<LabeledDigraph> extract_negative_examples(
    const LabeledDigraph& g, const std::vector<std::set<VertexId>>& positives,
    std::size_t k, double sampleFrac, std::uint64_t seed) {
  NegativeEdges ne = negative_edges(g, positives);
  std::vector<LabeledDigraph> posGraphs;
  for (const auto& p : positives) posGraphs.push_back(g.induced(p));
  return extract_negative_examples_from(ne.annotated, ne.edges, posGraphs, k,
                                        sampleFrac, seed);
}

}  // namespace gpforge
