#pragma once

#include "gpforge/graph.hpp"
#include "gpforge/match.hpp"

namespace gpforge {

// All connected subgraphs of g with at most maxVertices vertices that
// contain at least one seed edge, grown edge-at-a-time and deduplicated by
// canonical_form(WithFlags). With sampleFrac < 1 a seeded-random
// ceil(frac*n) of the partial subgraphs survive each expansion round.
// Result is sorted by canonical code.
std::vector<LabeledDigraph> enumerate_connected_subgraphs(
    const LabeledDigraph& g, std::size_t maxVertices,
    const std::vector<Edge>& seedEdges, double sampleFrac = 1.0,
    std::uint64_t seed = 0);

// Every connected edge-bearing subgraph of g (as concrete edge subsets),
// deduplicated by edge set but not by isomorphism. Requires <= 64 edges.
std::vector<std::uint64_t> connected_edge_masks(const LabeledDigraph& g);

LabeledDigraph graph_from_mask(const LabeledDigraph& g, std::uint64_t mask);

// Maximal common subgraphs of a and b under LabelsOnly matching: common
// edge subgraphs maximal by inclusion, deduplicated by canonical form,
// with results that are proper subgraphs of other results removed. When a
// and b share vertex labels but no compatible edge, the single edgeless
// graph on the shared label multiset is returned; with no shared labels
// the result is empty.
std::vector<LabeledDigraph> maximal_common_subgraphs(const LabeledDigraph& a,
                                                     const LabeledDigraph& b);

}  // namespace gpforge
