#include "gpforge/core_gen.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "gpforge/subgraph_enum.hpp"

namespace gpforge {

bool strong_match(const LabeledDigraph& candidate, const LabeledDigraph& negative) {
  if (candidate.edgeCount() == 0) return false;
  bool hit = false;
  subgraph_match(candidate, negative, MatchMode::LabelsOnly, [&](const Embedding& emb) {
    for (const Edge& e : candidate.edges()) {
      const Edge* img = negative.findEdge(emb.at(e.src), emb.at(e.dst), e.label);
      if (img && img->neg) {
        hit = true;
        return false;
      }
    }
    return true;
  });
  return hit;
}

bool strong_match_any(const LabeledDigraph& candidate,
                      const std::vector<LabeledDigraph>& negatives) {
  for (const LabeledDigraph& n : negatives)
    if (strong_match(candidate, n)) return true;
  return false;
}

Lattice build_lattice(const std::vector<LabeledDigraph>& positives,
                      const std::vector<LabeledDigraph>& negatives) {
  if (positives.empty()) throw InputError("at least one positive example required");

  std::map<CanonicalCode, Hypothesis> all;
  std::vector<CanonicalCode> level;

  for (const LabeledDigraph& p : positives) {
    if (strong_match_any(p, negatives)) continue;
    CanonicalCode code = canonical_form(p, MatchMode::LabelsOnly);
    if (all.emplace(code, Hypothesis{p, 0, {}}).second) level.push_back(code);
  }
  std::sort(level.begin(), level.end());

  int depth = 0;
  while (level.size() >= 2) {
    ++depth;
    std::vector<CanonicalCode> next;
    for (std::size_t i = 0; i < level.size(); ++i) {
      for (std::size_t j = i + 1; j < level.size(); ++j) {
        const LabeledDigraph& x = all.at(level[i]).graph;
        const LabeledDigraph& y = all.at(level[j]).graph;
        for (LabeledDigraph& m : maximal_common_subgraphs(x, y)) {
          if (strong_match_any(m, negatives)) continue;
          CanonicalCode code = canonical_form(m, MatchMode::LabelsOnly);
          if (all.emplace(code, Hypothesis{std::move(m), depth, {level[i], level[j]}})
                  .second)
            next.push_back(code);
        }
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }

  Lattice out;
  for (const auto& [code, h] : all) out.elements.push_back(h);

  // hypotheses generalize every positive example; among those, keep the
  // most general (no surviving proper subgraph)
  std::vector<const Hypothesis*> common;
  for (const auto& [code, h] : all) {
    bool inAll = true;
    for (const LabeledDigraph& p : positives)
      if (!has_embedding(h.graph, p, MatchMode::LabelsOnly)) {
        inAll = false;
        break;
      }
    if (inAll) common.push_back(&h);
  }
  for (const Hypothesis* h : common) {
    bool hasMoreGeneral = false;
    for (const Hypothesis* h2 : common) {
      if (h2 == h) continue;
      if (is_proper_subgraph_of(h2->graph, h->graph, MatchMode::LabelsOnly)) {
        hasMoreGeneral = true;
        break;
      }
    }
    if (!hasMoreGeneral) out.hypotheses.push_back(*h);
  }
  return out;
}

std::vector<Hypothesis> build_positive_lattice(
    const std::vector<LabeledDigraph>& positives,
    const std::vector<LabeledDigraph>& negatives) {
  return build_lattice(positives, negatives).hypotheses;
}

std::vector<LabeledDigraph> relax_hypothesis(const LabeledDigraph& h,
                                             const std::vector<LabeledDigraph>& negatives) {
  if (h.edgeCount() == 0) return {};

  std::vector<std::uint64_t> masks = connected_edge_masks(h);
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  // Scan small to large. A mask containing an already-found minimal mask
  // cannot be minimal; any mask free of them is minimal iff it avoids all
  // strong matches (an avoiding proper submask would contain an earlier
  // minimal mask). Memoize the strong-match status by shape.
  std::map<CanonicalCode, bool> okByCode;
  std::vector<std::uint64_t> minimalMasks;
  std::map<CanonicalCode, LabeledDigraph> result;
  for (std::uint64_t mask : masks) {
    bool subsumed = false;
    for (std::uint64_t mm : minimalMasks)
      if ((mm & mask) == mm && mm != mask) {
        subsumed = true;
        break;
      }
    if (subsumed) continue;
    LabeledDigraph sub = graph_from_mask(h, mask);
    CanonicalCode code = canonical_form(sub, MatchMode::LabelsOnly);
    auto it = okByCode.find(code);
    if (it == okByCode.end())
      it = okByCode.emplace(code, !strong_match_any(sub, negatives)).first;
    if (!it->second) continue;
    minimalMasks.push_back(mask);
    result.emplace(std::move(code), std::move(sub));
  }

  std::vector<LabeledDigraph> out;
  for (auto& [code, g] : result) out.push_back(std::move(g));
  return out;
}

std::vector<LabeledDigraph> generate_cores(const std::vector<LabeledDigraph>& positives,
                                           const std::vector<LabeledDigraph>& negatives) {
  std::map<CanonicalCode, LabeledDigraph> byCode;
  for (const Hypothesis& h : build_positive_lattice(positives, negatives))
    for (LabeledDigraph& c : relax_hypothesis(h.graph, negatives))
      byCode.emplace(canonical_form(c, MatchMode::LabelsOnly), std::move(c));
  std::vector<LabeledDigraph> out;
  for (auto& [code, g] : byCode) out.push_back(std::move(g));
  return out;
}

}  // namespace gpforge
