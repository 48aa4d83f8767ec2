#pragma once

#include <map>
#include <vector>

#include "gpforge/graph.hpp"
#include "gpforge/util.hpp"

namespace gpforge::testing {

inline LabeledDigraph make_uniform(std::size_t n,
                                   const std::vector<std::pair<VertexId, VertexId>>& es) {
  std::vector<Vertex> vs;
  for (VertexId i = 1; i <= n; ++i) vs.push_back({i, "n"});
  std::vector<Edge> edges;
  for (auto [s, d] : es) edges.push_back({s, d, "e", false});
  return LabeledDigraph(std::move(vs), std::move(edges));
}

// Two feed-forward loops {1,2,3} and {4,5,6} joined by the cross link 3->4.
inline LabeledDigraph make_f1() {
  return make_uniform(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {3, 4}});
}

inline std::vector<std::set<VertexId>> f1_positives() {
  return {{1, 2, 3}, {4, 5, 6}};
}

inline LabeledDigraph make_ffl() { return make_uniform(3, {{1, 2}, {1, 3}, {2, 3}}); }
inline LabeledDigraph make_out_star() { return make_uniform(3, {{1, 2}, {1, 3}}); }
inline LabeledDigraph make_in_star() { return make_uniform(3, {{2, 1}, {3, 1}}); }
inline LabeledDigraph make_single_edge() { return make_uniform(2, {{1, 2}}); }

// u->a, a->b with a->b flagged
inline LabeledDigraph make_in_path_neg() {
  std::vector<Vertex> vs = {{1, "n"}, {2, "n"}, {3, "n"}};
  std::vector<Edge> es = {{1, 2, "e", false}, {2, 3, "e", true}};
  return LabeledDigraph(std::move(vs), std::move(es));
}

// a->b flagged, b->w
inline LabeledDigraph make_out_path_neg() {
  std::vector<Vertex> vs = {{1, "n"}, {2, "n"}, {3, "n"}};
  std::vector<Edge> es = {{1, 2, "e", true}, {2, 3, "e", false}};
  return LabeledDigraph(std::move(vs), std::move(es));
}

inline LabeledDigraph random_graph(Rng& rng, std::size_t n, double p,
                                   std::size_t numLabels = 1, bool withFlags = false,
                                   double flagProb = 0.25) {
  std::vector<Vertex> vs;
  for (VertexId i = 0; i < n; ++i)
    vs.push_back({i, "L" + std::to_string(rng.below(numLabels))});
  std::vector<Edge> es;
  for (VertexId s = 0; s < n; ++s)
    for (VertexId d = 0; d < n; ++d)
      if (s != d && rng.unit() < p)
        es.push_back({s, d, "e", withFlags && rng.unit() < flagProb});
  return LabeledDigraph(std::move(vs), std::move(es));
}

// random relabeling of vertex ids (same shape)
inline LabeledDigraph shuffled_copy(const LabeledDigraph& g, Rng& rng) {
  std::vector<VertexId> ids;
  for (const Vertex& v : g.vertices()) ids.push_back(v.id);
  std::vector<VertexId> perm = ids;
  rng.shuffle(perm);
  std::map<VertexId, VertexId> remap;
  for (std::size_t i = 0; i < ids.size(); ++i) remap[ids[i]] = perm[i] + 1000;
  std::vector<Vertex> vs;
  for (const Vertex& v : g.vertices()) vs.push_back({remap[v.id], v.label});
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) es.push_back({remap[e.src], remap[e.dst], e.label, e.neg});
  return LabeledDigraph(std::move(vs), std::move(es));
}

}  // namespace gpforge::testing
