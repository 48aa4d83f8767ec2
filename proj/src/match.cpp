#include "gpforge/match.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace gpforge {

Embedding::Embedding(std::vector<std::pair<VertexId, VertexId>> pairs)
    : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
}

VertexId Embedding::at(VertexId patternId) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(),
                             std::make_pair(patternId, VertexId{0}),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
  if (it == pairs_.end() || it->first != patternId)
    throw InputError("vertex not in embedding: " + std::to_string(patternId));
  return it->second;
}

std::set<VertexId> Embedding::image() const {
  std::set<VertexId> out;
  for (const auto& [p, h] : pairs_) out.insert(h);
  return out;
}

namespace {

struct Matcher {
  const LabeledDigraph& pat;
  const LabeledDigraph& host;
  MatchMode mode;
  const EmbeddingVisitor& visit;

  std::vector<std::size_t> order;            // pattern indices in match order
  std::vector<std::size_t> posOf;            // pattern index -> position
  std::vector<std::size_t> map;              // pattern index -> host index
  std::vector<char> used;                    // host index occupancy
  bool found = false;
  bool stopped = false;

  Matcher(const LabeledDigraph& p, const LabeledDigraph& h, MatchMode m,
          const EmbeddingVisitor& v)
      : pat(p), host(h), mode(m), visit(v) {
    buildOrder();
    posOf.assign(pat.vertexCount(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) posOf[order[i]] = i;
    map.assign(pat.vertexCount(), 0);
    used.assign(host.vertexCount(), 0);
  }

  void buildOrder() {
    std::size_t n = pat.vertexCount();
    std::vector<char> placed(n, 0);
    std::vector<std::size_t> linksToPlaced(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == n) {
          best = v;
          continue;
        }
        auto deg = [&](std::size_t x) { return pat.outDegree(x) + pat.inDegree(x); };
        if (std::make_pair(linksToPlaced[v], deg(v)) >
            std::make_pair(linksToPlaced[best], deg(best)))
          best = v;
      }
      placed[best] = 1;
      order.push_back(best);
      for (const auto& a : pat.outArcs(best))
        if (!placed[a.other]) ++linksToPlaced[a.other];
      for (const auto& a : pat.inArcs(best))
        if (!placed[a.other]) ++linksToPlaced[a.other];
    }
  }

  bool flagsOk(const Edge& pe, const Edge& he) const {
    return mode == MatchMode::LabelsOnly || pe.neg == he.neg;
  }

  // Checks every pattern arc between p and already-mapped vertices.
  bool consistent(std::size_t p, std::size_t h) const {
    VertexId hid = host.idOf(h);
    for (const auto& a : pat.outArcs(p)) {
      if (posOf[a.other] >= depth) continue;
      const Edge& pe = pat.edges()[a.edge];
      const Edge* he = host.findEdge(hid, host.idOf(map[a.other]), pe.label);
      if (!he || !flagsOk(pe, *he)) return false;
    }
    for (const auto& a : pat.inArcs(p)) {
      if (posOf[a.other] >= depth) continue;
      const Edge& pe = pat.edges()[a.edge];
      const Edge* he = host.findEdge(host.idOf(map[a.other]), hid, pe.label);
      if (!he || !flagsOk(pe, *he)) return false;
    }
    return true;
  }

  std::size_t depth = 0;

  void emit() {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(pat.vertexCount());
    for (std::size_t p = 0; p < pat.vertexCount(); ++p)
      pairs.emplace_back(pat.idOf(p), host.idOf(map[p]));
    found = true;
    if (!visit(Embedding(std::move(pairs)))) stopped = true;
  }

  void run() {
    if (pat.vertexCount() > host.vertexCount()) return;
    step();
  }

  void step() {
    if (depth == order.size()) {
      emit();
      return;
    }
    std::size_t p = order[depth];
    const std::string& plabel = pat.vertices()[p].label;

    // Restrict candidates via a mapped neighbor when one exists.
    std::vector<std::size_t> cands;
    bool restricted = false;
    for (const auto& a : pat.outArcs(p)) {
      if (posOf[a.other] < depth) {
        for (const auto& ha : host.inArcs(map[a.other])) cands.push_back(ha.other);
        restricted = true;
        break;
      }
    }
    if (!restricted) {
      for (const auto& a : pat.inArcs(p)) {
        if (posOf[a.other] < depth) {
          for (const auto& ha : host.outArcs(map[a.other])) cands.push_back(ha.other);
          restricted = true;
          break;
        }
      }
    }
    if (!restricted) {
      cands.resize(host.vertexCount());
      for (std::size_t i = 0; i < cands.size(); ++i) cands[i] = i;
    } else {
      std::sort(cands.begin(), cands.end());
      cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    }

    for (std::size_t h : cands) {
      if (stopped) return;
      if (used[h]) continue;
      if (host.vertices()[h].label != plabel) continue;
      if (host.outDegree(h) < pat.outDegree(p) || host.inDegree(h) < pat.inDegree(p))
        continue;
      if (!consistent(p, h)) continue;
      used[h] = 1;
      map[p] = h;
      ++depth;
      step();
      --depth;
      used[h] = 0;
    }
  }
};

}  // namespace

bool subgraph_match(const LabeledDigraph& pattern, const LabeledDigraph& host,
                    MatchMode mode, const EmbeddingVisitor& visit) {
  if (pattern.empty()) {
    visit(Embedding{});
    return true;
  }
  Matcher m(pattern, host, mode, visit);
  m.run();
  return m.found;
}

std::vector<Embedding> all_embeddings(const LabeledDigraph& pattern,
                                      const LabeledDigraph& host, MatchMode mode) {
  std::vector<Embedding> out;
  subgraph_match(pattern, host, mode, [&](const Embedding& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

std::optional<Embedding> first_embedding(const LabeledDigraph& pattern,
                                         const LabeledDigraph& host, MatchMode mode) {
  std::optional<Embedding> out;
  subgraph_match(pattern, host, mode, [&](const Embedding& e) {
    out = e;
    return false;
  });
  return out;
}

bool has_embedding(const LabeledDigraph& pattern, const LabeledDigraph& host,
                   MatchMode mode) {
  return subgraph_match(pattern, host, mode, [](const Embedding&) { return false; });
}

bool is_proper_subgraph_of(const LabeledDigraph& a, const LabeledDigraph& b,
                           MatchMode mode) {
  bool sameCounts = a.vertexCount() == b.vertexCount() && a.edgeCount() == b.edgeCount() &&
                    (mode == MatchMode::LabelsOnly ||
                     a.flaggedEdgeCount() == b.flaggedEdgeCount());
  // With equal counts an embedding is a bijection preserving all edges,
  // i.e. an isomorphism, so "proper" rules that case out up front.
  if (sameCounts) return false;
  return has_embedding(a, b, mode);
}

bool is_isomorphic(const LabeledDigraph& a, const LabeledDigraph& b, MatchMode mode) {
  if (a.vertexCount() != b.vertexCount() || a.edgeCount() != b.edgeCount()) return false;
  if (mode == MatchMode::WithFlags && a.flaggedEdgeCount() != b.flaggedEdgeCount())
    return false;
  return has_embedding(a, b, mode);
}

namespace {

// Canonical labeling by color refinement plus individualization. Sizes in
// this codebase stay small (negative examples, cores, lattice elements), so
// the naive branch-everything search is fine.
struct Canonicalizer {
  const LabeledDigraph& g;
  MatchMode mode;
  std::size_t n;

  Canonicalizer(const LabeledDigraph& graph, MatchMode m)
      : g(graph), mode(m), n(graph.vertexCount()) {}

  using Colors = std::vector<int>;

  Colors initialColors() const {
    std::vector<std::tuple<std::string, std::size_t, std::size_t>> keys(n);
    for (std::size_t v = 0; v < n; ++v)
      keys[v] = {g.vertices()[v].label, g.outDegree(v), g.inDegree(v)};
    return ranks(keys);
  }

  template <class Key>
  Colors ranks(const std::vector<Key>& keys) const {
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Colors c(n);
    for (std::size_t v = 0; v < n; ++v)
      c[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) -
                              sorted.begin());
    return c;
  }

  void refine(Colors& colors) const {
    for (;;) {
      using ArcSig = std::tuple<int, std::string, int, int>;  // dir, label, flag, color
      std::vector<std::pair<int, std::vector<ArcSig>>> keys(n);
      for (std::size_t v = 0; v < n; ++v) {
        std::vector<ArcSig> sig;
        for (const auto& a : g.outArcs(v)) {
          const Edge& e = g.edges()[a.edge];
          sig.emplace_back(0, e.label, mode == MatchMode::WithFlags && e.neg ? 1 : 0,
                           colors[a.other]);
        }
        for (const auto& a : g.inArcs(v)) {
          const Edge& e = g.edges()[a.edge];
          sig.emplace_back(1, e.label, mode == MatchMode::WithFlags && e.neg ? 1 : 0,
                           colors[a.other]);
        }
        std::sort(sig.begin(), sig.end());
        keys[v] = {colors[v], std::move(sig)};
      }
      Colors next = ranks(keys);
      if (next == colors) return;
      colors = std::move(next);
    }
  }

  bool discrete(const Colors& colors) const {
    std::vector<char> seen(n, 0);
    for (int c : colors) {
      if (seen[c]) return false;
      seen[c] = 1;
    }
    return true;
  }

  std::string encode(const Colors& colors) const {
    // colors form a permutation; position of v is colors[v]
    std::vector<std::size_t> at(n);
    for (std::size_t v = 0; v < n; ++v) at[colors[v]] = v;
    std::string code;
    code += std::to_string(n);
    code += '|';
    for (std::size_t i = 0; i < n; ++i) {
      code += g.vertices()[at[i]].label;
      code += ',';
    }
    code += '|';
    std::vector<std::string> es;
    for (const Edge& e : g.edges()) {
      std::string s = std::to_string(colors[g.indexOf(e.src)]) + '>' +
                      std::to_string(colors[g.indexOf(e.dst)]) + ':' + e.label;
      if (mode == MatchMode::WithFlags && e.neg) s += "!";
      es.push_back(std::move(s));
    }
    std::sort(es.begin(), es.end());
    for (const std::string& s : es) {
      code += s;
      code += ';';
    }
    return code;
  }

  std::string search(Colors colors) const {
    refine(colors);
    if (discrete(colors)) return encode(colors);
    // Split the smallest-valued non-singleton class and branch on each member.
    int target = -1;
    std::vector<int> count(n, 0);
    for (int c : colors) ++count[c];
    for (std::size_t c = 0; c < n; ++c) {
      if (count[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    }
    std::string best;
    for (std::size_t v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      Colors branch = colors;
      for (std::size_t u = 0; u < n; ++u)
        if (branch[u] > target || (branch[u] == target && u != v)) ++branch[u];
      // v keeps `target`, everyone else in the class moves up one
      std::string code = search(std::move(branch));
      if (best.empty() || code < best) best = std::move(code);
    }
    return best;
  }

  std::string canonical() const {
    if (n == 0) return "0||";
    if (g.edgeCount() == 0) {
      // order is irrelevant; sorted labels are canonical
      std::vector<std::string> labels;
      for (const auto& v : g.vertices()) labels.push_back(v.label);
      std::sort(labels.begin(), labels.end());
      std::string code = std::to_string(n) + '|';
      for (const auto& l : labels) {
        code += l;
        code += ',';
      }
      code += '|';
      return code;
    }
    return search(initialColors());
  }
};

}  // namespace

CanonicalCode canonical_form(const LabeledDigraph& g, MatchMode mode) {
  auto& slot = g.codeCache[mode == MatchMode::WithFlags ? 1 : 0];
  if (slot) return *slot;
  CanonicalCode code = Canonicalizer(g, mode).canonical();
  slot = code;
  return code;
}

std::string code_hex(const CanonicalCode& code) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(code.size() * 2);
  for (unsigned char c : code) {
    out += digits[c >> 4];
    out += digits[c & 0xf];
  }
  return out;
}

}  // namespace gpforge
