#pragma once

// Brute-force reference implementations, independent of the library's
// search/canonicalization code paths. Everything here enumerates injections
// or edge subsets directly and is only suitable for tiny graphs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "gpforge/graph.hpp"

namespace gpforge::oracle {

using Mapping = std::map<VertexId, VertexId>;

inline bool mapping_ok(const LabeledDigraph& p, const LabeledDigraph& h,
                       const Mapping& m, MatchMode mode) {
  for (const auto& [a, b] : m)
    if (p.labelOf(a) != h.labelOf(b)) return false;
  for (const Edge& e : p.edges()) {
    const Edge* img = h.findEdge(m.at(e.src), m.at(e.dst), e.label);
    if (!img) return false;
    if (mode == MatchMode::WithFlags && img->neg != e.neg) return false;
  }
  return true;
}

// all injective vertex maps from p into h that preserve labels and edges
inline std::vector<Mapping> brute_embeddings(const LabeledDigraph& p,
                                             const LabeledDigraph& h, MatchMode mode) {
  std::vector<Mapping> out;
  std::size_t np = p.vertexCount(), nh = h.vertexCount();
  if (np > nh) return out;
  if (np == 0) return {Mapping{}};

  std::vector<VertexId> pids, hids;
  for (const Vertex& v : p.vertices()) pids.push_back(v.id);
  for (const Vertex& v : h.vertices()) hids.push_back(v.id);

  std::vector<std::size_t> choice(np, 0);
  std::vector<char> used(nh, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == np) {
      Mapping m;
      for (std::size_t i = 0; i < np; ++i) m[pids[i]] = hids[choice[i]];
      if (mapping_ok(p, h, m, mode)) out.push_back(std::move(m));
      return;
    }
    for (std::size_t j = 0; j < nh; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      choice[depth] = j;
      rec(depth + 1);
      used[j] = 0;
    }
  };
  rec(0);
  return out;
}

inline bool brute_subgraph(const LabeledDigraph& p, const LabeledDigraph& h,
                           MatchMode mode) {
  return !brute_embeddings(p, h, mode).empty();
}

inline bool brute_iso(const LabeledDigraph& a, const LabeledDigraph& b, MatchMode mode) {
  if (a.vertexCount() != b.vertexCount() || a.edgeCount() != b.edgeCount()) return false;
  for (const Mapping& m : brute_embeddings(a, b, mode)) {
    // bijective by size; verify edges both ways
    Mapping inv;
    for (const auto& [x, y] : m) inv[y] = x;
    if (mapping_ok(b, a, inv, mode)) return true;
  }
  return false;
}

// family equality up to isomorphism under the given mode
inline bool same_family(std::vector<LabeledDigraph> a, std::vector<LabeledDigraph> b,
                        MatchMode mode) {
  if (a.size() != b.size()) return false;
  std::vector<char> used(b.size(), 0);
  for (const LabeledDigraph& x : a) {
    bool matched = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      if (brute_iso(x, b[j], mode)) {
        used[j] = 1;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

inline bool edge_set_connected(const LabeledDigraph& g, const std::vector<std::size_t>& es) {
  if (es.empty()) return false;
  std::set<VertexId> vs;
  for (std::size_t ei : es) {
    const Edge& e = g.edges()[ei];
    vs.insert(e.src);
    vs.insert(e.dst);
  }
  // flood fill over shared endpoints
  std::set<VertexId> reach;
  const Edge& first = g.edges()[es[0]];
  reach.insert(first.src);
  reach.insert(first.dst);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t ei : es) {
      const Edge& e = g.edges()[ei];
      bool s = reach.count(e.src), d = reach.count(e.dst);
      if (s != d) {
        reach.insert(e.src);
        reach.insert(e.dst);
        changed = true;
      }
    }
  }
  return reach.size() == vs.size();
}

inline LabeledDigraph from_edge_subset(const LabeledDigraph& g,
                                       const std::vector<std::size_t>& es) {
  std::vector<Edge> edges;
  for (std::size_t ei : es) edges.push_back(g.edges()[ei]);
  return LabeledDigraph::fromEdges(edges, g);
}

// every connected edge subset of g, as graphs (no isolated vertices)
inline std::vector<LabeledDigraph> brute_connected_subgraphs(const LabeledDigraph& g,
                                                             std::size_t maxVertices) {
  std::size_t m = g.edgeCount();
  std::vector<LabeledDigraph> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::size_t> es;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::uint64_t{1} << i)) es.push_back(i);
    std::set<VertexId> vs;
    for (std::size_t ei : es) {
      vs.insert(g.edges()[ei].src);
      vs.insert(g.edges()[ei].dst);
    }
    if (vs.size() > maxVertices) continue;
    if (!edge_set_connected(g, es)) continue;
    out.push_back(from_edge_subset(g, es));
  }
  return out;
}

// Fig. 3 by exhaustive subset enumeration over the annotated graph.
inline std::vector<LabeledDigraph> brute_negative_examples(
    const LabeledDigraph& annotated, const std::vector<LabeledDigraph>& positives,
    std::size_t k) {
  std::vector<LabeledDigraph> pool;
  for (LabeledDigraph& s : brute_connected_subgraphs(annotated, k)) {
    if (s.flaggedEdgeCount() == 0) continue;
    bool dup = false;
    for (const LabeledDigraph& seen : pool)
      if (brute_iso(s, seen, MatchMode::WithFlags)) {
        dup = true;
        break;
      }
    if (!dup) pool.push_back(std::move(s));
  }
  std::erase_if(pool, [&](const LabeledDigraph& p) {
    for (const LabeledDigraph& pos : positives)
      if (brute_subgraph(pos, p, MatchMode::LabelsOnly)) return true;
    return false;
  });
  std::vector<LabeledDigraph> out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    bool subsumed = false;
    for (std::size_t j = 0; j < pool.size() && !subsumed; ++j) {
      if (i == j) continue;
      if (brute_subgraph(pool[i], pool[j], MatchMode::WithFlags) &&
          !brute_iso(pool[i], pool[j], MatchMode::WithFlags))
        subsumed = true;
    }
    if (!subsumed) out.push_back(pool[i]);
  }
  return out;
}

// all common subgraphs of a and b (labels only), maximal by containment
inline std::vector<LabeledDigraph> brute_mcs(const LabeledDigraph& a,
                                             const LabeledDigraph& b) {
  std::vector<LabeledDigraph> common;
  std::size_t m = a.edgeCount();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::size_t> es;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::uint64_t{1} << i)) es.push_back(i);
    LabeledDigraph s = from_edge_subset(a, es);
    if (!brute_subgraph(s, b, MatchMode::LabelsOnly)) continue;
    bool dup = false;
    for (const LabeledDigraph& seen : common)
      if (brute_iso(s, seen, MatchMode::LabelsOnly)) {
        dup = true;
        break;
      }
    if (!dup) common.push_back(std::move(s));
  }
  std::vector<LabeledDigraph> out;
  for (std::size_t i = 0; i < common.size(); ++i) {
    bool subsumed = false;
    for (std::size_t j = 0; j < common.size() && !subsumed; ++j) {
      if (i == j) continue;
      if (brute_subgraph(common[i], common[j], MatchMode::LabelsOnly) &&
          !brute_iso(common[i], common[j], MatchMode::LabelsOnly))
        subsumed = true;
    }
    if (!subsumed) out.push_back(common[i]);
  }
  return out;
}

// Def. 5 expansion closure computed with the brute matcher only.
inline std::set<VertexId> brute_closure(const LabeledDigraph& core,
                                        const LabeledDigraph& host,
                                        std::set<VertexId> current) {
  std::size_t m = core.vertexCount();
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Vertex& hv : host.vertices()) {
      if (current.count(hv.id)) continue;
      // does core match induced(subset of current of size m-1, plus hv)?
      std::vector<VertexId> pool(current.begin(), current.end());
      std::vector<char> pick(pool.size(), 0);
      if (pool.size() < m - 1) continue;
      std::fill(pick.begin(), pick.begin() + (m - 1), 1);
      std::sort(pick.begin(), pick.end());  // all combinations via next_permutation
      bool ok = false;
      do {
        std::set<VertexId> subset = {hv.id};
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (pick[i]) subset.insert(pool[i]);
        if (brute_subgraph(core, host.induced(subset), MatchMode::LabelsOnly)) {
          ok = true;
          break;
        }
      } while (std::next_permutation(pick.begin(), pick.end()));
      if (ok) {
        current.insert(hv.id);
        grew = true;
      }
    }
  }
  return current;
}

// every GP of host induced from core: closures of all core embeddings
inline std::set<std::set<VertexId>> brute_gp_family(const LabeledDigraph& core,
                                                    const LabeledDigraph& host) {
  std::set<std::set<VertexId>> out;
  for (const Mapping& m : brute_embeddings(core, host, MatchMode::LabelsOnly)) {
    std::set<VertexId> image;
    for (const auto& [p, h] : m) image.insert(h);
    out.insert(brute_closure(core, host, image));
  }
  return out;
}

}  // namespace gpforge::oracle
