#pragma once

#include "gpforge/graph.hpp"
#include "gpforge/match.hpp"

namespace gpforge {

// Lattice element: a candidate core with provenance.
struct Hypothesis {
  LabeledDigraph graph;
  int level = 0;
  std::vector<CanonicalCode> parents;  // codes of the pair it generalizes
};

// True iff some LabelsOnly embedding of candidate in negative covers at
// least one flagged edge of negative.
bool strong_match(const LabeledDigraph& candidate, const LabeledDigraph& negative);
bool strong_match_any(const LabeledDigraph& candidate,
                      const std::vector<LabeledDigraph>& negatives);

struct Lattice {
  std::vector<Hypothesis> elements;    // every surviving element, all levels
  std::vector<Hypothesis> hypotheses;  // most general surviving elements
};

// Builds the generalization lattice: level 0 is the deduplicated positives,
// level i+1 the maximal common subgraphs of pairs within level i; elements
// strongly matching a negative example are discarded at every level. The
// positive hypotheses are the surviving elements with no surviving proper
// subgraph below them.
Lattice build_lattice(const std::vector<LabeledDigraph>& positives,
                      const std::vector<LabeledDigraph>& negatives);

std::vector<Hypothesis> build_positive_lattice(
    const std::vector<LabeledDigraph>& positives,
    const std::vector<LabeledDigraph>& negatives);

// Minimal connected edge-bearing subgraphs of h that avoid strong matches:
// every returned h' has no strong match, and each of its connected
// edge-bearing proper subgraphs strongly matches some negative.
std::vector<LabeledDigraph> relax_hypothesis(const LabeledDigraph& h,
                                             const std::vector<LabeledDigraph>& negatives);

// Union of relax_hypothesis over all positive hypotheses, deduplicated.
std::vector<LabeledDigraph> generate_cores(const std::vector<LabeledDigraph>& positives,
                                           const std::vector<LabeledDigraph>& negatives);

}  // namespace gpforge
