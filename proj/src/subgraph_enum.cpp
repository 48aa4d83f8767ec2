#include "gpforge/subgraph_enum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "gpforge/util.hpp"

namespace gpforge {

namespace {

std::vector<std::size_t> edgeIndices(const LabeledDigraph& g,
                                     const std::vector<Edge>& seedEdges) {
  std::vector<std::size_t> out;
  for (const Edge& se : seedEdges) {
    bool ok = false;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      if (key_of(g.edges()[i]) == key_of(se)) {
        out.push_back(i);
        ok = true;
        break;
      }
    }
    if (!ok)
      throw InputError("seed edge not in graph: " + std::to_string(se.src) + "->" +
                       std::to_string(se.dst));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<LabeledDigraph> enumerate_connected_subgraphs(
    const LabeledDigraph& g, std::size_t maxVertices,
    const std::vector<Edge>& seedEdges, double sampleFrac, std::uint64_t seed) {
  if (maxVertices < 2) throw InputError("maxVertices must be >= 2");
  if (sampleFrac <= 0.0 || sampleFrac > 1.0)
    throw InputError("sampleFrac must be in (0,1]");

  using EdgeSet = std::vector<std::size_t>;  // sorted edge indices
  std::vector<EdgeSet> level;
  for (std::size_t i : edgeIndices(g, seedEdges)) level.push_back({i});

  std::set<EdgeSet> seen(level.begin(), level.end());
  std::vector<EdgeSet> kept = level;
  Rng rng(seed);

  while (!level.empty()) {
    std::vector<EdgeSet> next;
    for (const EdgeSet& s : level) {
      std::set<std::size_t> vidx;
      for (std::size_t ei : s) {
        const Edge& e = g.edges()[ei];
        vidx.insert(g.indexOf(e.src));
        vidx.insert(g.indexOf(e.dst));
      }
      for (std::size_t v : vidx) {
        auto tryEdge = [&](std::size_t ei, std::size_t otherIdx) {
          if (std::binary_search(s.begin(), s.end(), ei)) return;
          std::size_t newVerts = vidx.size() + (vidx.count(otherIdx) ? 0 : 1);
          if (newVerts > maxVertices) return;
          EdgeSet grown = s;
          grown.insert(std::upper_bound(grown.begin(), grown.end(), ei), ei);
          if (seen.insert(grown).second) next.push_back(std::move(grown));
        };
        for (const auto& a : g.outArcs(v)) tryEdge(a.edge, a.other);
        for (const auto& a : g.inArcs(v)) tryEdge(a.edge, a.other);
      }
    }
    std::sort(next.begin(), next.end());
    if (sampleFrac < 1.0 && !next.empty()) {
      std::size_t keep = static_cast<std::size_t>(
          std::ceil(sampleFrac * static_cast<double>(next.size())));
      rng.shuffle(next);
      next.resize(keep);
      std::sort(next.begin(), next.end());
    }
    kept.insert(kept.end(), next.begin(), next.end());
    level = std::move(next);
  }

  std::map<CanonicalCode, LabeledDigraph> byCode;
  for (const EdgeSet& s : kept) {
    std::vector<Edge> es;
    for (std::size_t ei : s) es.push_back(g.edges()[ei]);
    LabeledDigraph sub = LabeledDigraph::fromEdges(es, g);
    byCode.emplace(canonical_form(sub, MatchMode::WithFlags), std::move(sub));
  }
  std::vector<LabeledDigraph> out;
  for (auto& [code, sub] : byCode) out.push_back(std::move(sub));
  return out;
}

std::vector<std::uint64_t> connected_edge_masks(const LabeledDigraph& g) {
  std::size_t m = g.edgeCount();
  if (m > 64) throw InputError("graph too large for edge-mask enumeration");
  // grow from each single edge; dedupe by mask
  std::set<std::uint64_t> seen;
  std::vector<std::uint64_t> level;
  for (std::size_t i = 0; i < m; ++i) {
    level.push_back(std::uint64_t{1} << i);
    seen.insert(level.back());
  }
  std::vector<std::uint64_t> all = level;

  // adjacency between edges sharing an endpoint
  std::vector<std::uint64_t> adj(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const Edge& a = g.edges()[i];
      const Edge& b = g.edges()[j];
      if (a.src == b.src || a.src == b.dst || a.dst == b.src || a.dst == b.dst)
        adj[i] |= std::uint64_t{1} << j;
    }
  }

  while (!level.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t s : level) {
      std::uint64_t frontier = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (s & (std::uint64_t{1} << i)) frontier |= adj[i];
      frontier &= ~s;
      for (std::size_t i = 0; i < m; ++i) {
        if (!(frontier & (std::uint64_t{1} << i))) continue;
        std::uint64_t grown = s | (std::uint64_t{1} << i);
        if (seen.insert(grown).second) next.push_back(grown);
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

LabeledDigraph graph_from_mask(const LabeledDigraph& g, std::uint64_t mask) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < g.edgeCount(); ++i)
    if (mask & (std::uint64_t{1} << i)) es.push_back(g.edges()[i]);
  return LabeledDigraph::fromEdges(es, g);
}

std::vector<LabeledDigraph> maximal_common_subgraphs(const LabeledDigraph& a,
                                                     const LabeledDigraph& b) {
  if (a.empty() || b.empty()) throw InputError("maximal_common_subgraphs: empty input");

  if (a.edgeCount() > 0 &&
      canonical_form(a, MatchMode::LabelsOnly) == canonical_form(b, MatchMode::LabelsOnly)) {
    // isomorphic inputs: the graph itself is the unique maximal common subgraph
    std::vector<Edge> es;
    for (Edge e : a.edges()) {
      e.neg = false;
      es.push_back(e);
    }
    return {LabeledDigraph::fromEdges(es, a)};
  }

  // Every common subgraph is isomorphic to an edge subset of the smaller
  // side, and embeddability into the other side is monotone under edge
  // removal. Grow embeddable subsets breadth-first; shapes are memoized so
  // isomorphic subsets share one embedding test.
  const LabeledDigraph& small = a.edgeCount() <= b.edgeCount() ? a : b;
  const LabeledDigraph& big = a.edgeCount() <= b.edgeCount() ? b : a;
  std::size_t m = small.edgeCount();
  if (m > 64) throw InputError("maximal_common_subgraphs: too many edges");

  auto subsetGraph = [&](std::uint64_t mask) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::uint64_t{1} << i)) {
        Edge e = small.edges()[i];
        e.neg = false;
        es.push_back(e);
      }
    return LabeledDigraph::fromEdges(es, small);
  };

  std::map<CanonicalCode, bool> embedMemo;
  std::map<std::uint64_t, CanonicalCode> family;  // embeddable subsets
  auto embeddable = [&](std::uint64_t mask) {
    LabeledDigraph sub = subsetGraph(mask);
    CanonicalCode code = canonical_form(sub, MatchMode::LabelsOnly);
    auto it = embedMemo.find(code);
    if (it == embedMemo.end())
      it = embedMemo.emplace(code, has_embedding(sub, big, MatchMode::LabelsOnly)).first;
    if (it->second) family.emplace(mask, std::move(code));
    return it->second;
  };

  std::vector<std::uint64_t> level;
  for (std::size_t i = 0; i < m; ++i)
    if (embeddable(std::uint64_t{1} << i)) level.push_back(std::uint64_t{1} << i);

  if (level.empty()) {
    // no common edge; fall back to the shared vertex-label multiset
    std::map<std::string, std::size_t> ca, cb;
    for (const auto& v : a.vertices()) ++ca[v.label];
    for (const auto& v : b.vertices()) ++cb[v.label];
    std::vector<Vertex> vs;
    VertexId id = 0;
    for (const auto& [label, na] : ca) {
      auto it = cb.find(label);
      if (it == cb.end()) continue;
      for (std::size_t k = 0; k < std::min(na, it->second); ++k)
        vs.push_back({id++, label});
    }
    if (vs.empty()) return {};
    return {LabeledDigraph(std::move(vs), {})};
  }

  std::set<std::uint64_t> tried(level.begin(), level.end());
  while (!level.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t s : level) {
      for (std::size_t i = 0; i < m; ++i) {
        std::uint64_t grown = s | (std::uint64_t{1} << i);
        if (grown == s || !tried.insert(grown).second) continue;
        if (embeddable(grown)) next.push_back(grown);
      }
    }
    level = std::move(next);
  }

  // subset-maximal members, deduplicated by shape
  std::map<CanonicalCode, LabeledDigraph> byCode;
  for (const auto& [mask, code] : family) {
    bool maximal = true;
    for (std::size_t i = 0; i < m && maximal; ++i) {
      std::uint64_t grown = mask | (std::uint64_t{1} << i);
      if (grown != mask && family.count(grown)) maximal = false;
    }
    if (maximal) byCode.emplace(code, subsetGraph(mask));
  }

  // drop results properly contained in another result
  std::vector<LabeledDigraph> all;
  for (auto& [code, sub] : byCode) all.push_back(std::move(sub));
  std::vector<LabeledDigraph> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool subsumed = false;
    for (std::size_t j = 0; j < all.size() && !subsumed; ++j)
      if (i != j && is_proper_subgraph_of(all[i], all[j], MatchMode::LabelsOnly))
        subsumed = true;
    if (!subsumed) out.push_back(all[i]);
  }
  return out;
}

}  // namespace gpforge
