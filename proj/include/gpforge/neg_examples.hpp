#pragma once

#include "gpforge/graph.hpp"

namespace gpforge {

struct NegativeEdges {
  std::vector<Edge> edges;   // flagged copies of the boundary edges
  LabeledDigraph annotated;  // g with exactly those edges flagged
};

// Union of the edge neighborhoods of the positive examples: every edge of g
// with exactly one endpoint inside some positive's vertex set.
NegativeEdges negative_edges(const LabeledDigraph& g,
                             const std::vector<std::set<VertexId>>& positives);

// Full negative-example extraction: enumerate connected subgraphs of size
// <= k around the negative edges, drop candidates that contain a positive
// example (labels only), then drop candidates subsumed by a larger example
// (flags included). sampleFrac < 1 samples the partial pools per expansion
// round; the two filters are never sampled.
std::vector<LabeledDigraph> extract_negative_examples(
    const LabeledDigraph& g, const std::vector<std::set<VertexId>>& positives,
    std::size_t k, double sampleFrac = 1.0, std::uint64_t seed = 0);

// Same pipeline starting from an already annotated graph and an explicit
// seed-edge / positive-graph pair; used by the soundness-guarantee check.
std::vector<LabeledDigraph> extract_negative_examples_from(
    const LabeledDigraph& annotated, const std::vector<Edge>& negEdges,
    const std::vector<LabeledDigraph>& positiveGraphs, std::size_t k,
    double sampleFrac = 1.0, std::uint64_t seed = 0);

}  // namespace gpforge
