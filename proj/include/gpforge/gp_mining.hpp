#pragma once

#include <functional>

#include "gpforge/graph.hpp"
#include "gpforge/match.hpp"

namespace gpforge {

struct GpResult {
  std::set<VertexId> vertexSet;  // ids in the original host
  LabeledDigraph graph;          // induced subgraph of the host
  CanonicalCode coreCode;        // canonical code (LabelsOnly) of the core
  Embedding seed;                // embedding the pattern grew from
};

// Vertices v outside `current` such that the core matches the induced
// subgraph on some m-1 vertices of `current` plus v (m = core size).
std::set<VertexId> natural_expansions(const LabeledDigraph& core,
                                      const LabeledDigraph& host,
                                      const std::set<VertexId>& current);

// Expands the seed's image to its unique fixpoint under the natural
// expansion rule; the result does not depend on the expansion order.
GpResult grow_gp(const Embedding& seed, const LabeledDigraph& core,
                 const LabeledDigraph& host);

// Single-vertex-at-a-time variant; `pick` chooses among the candidate
// expansions at each step (used to exercise order invariance).
using ExpansionPicker = std::function<VertexId(const std::vector<VertexId>&)>;
GpResult grow_gp_ordered(const Embedding& seed, const LabeledDigraph& core,
                         const LabeledDigraph& host, const ExpansionPicker& pick);

// Mines all GPs: iterates cores largest-first (canonical code tie-break),
// repeatedly grows one embedding into a GP and deletes its vertices from a
// working copy, so emitted GPs are pairwise vertex-disjoint.
std::vector<GpResult> mine_gps(const LabeledDigraph& host,
                               const std::vector<LabeledDigraph>& cores);

struct GuaranteeReport {
  bool negSetsEqual = false;          // Neg from examples == Neg from truth
  bool positivesClearNegatives = false;  // no example inside a negative
  bool coresWithinSizeBound = false;  // every core has <= k vertices
  bool all() const {
    return negSetsEqual && positivesClearNegatives && coresWithinSizeBound;
  }
};

GuaranteeReport check_soundness_conditions(
    const LabeledDigraph& host, const std::vector<std::set<VertexId>>& positives,
    const std::vector<std::set<VertexId>>& truthGps,
    const std::vector<LabeledDigraph>& cores, std::size_t k);

}  // namespace gpforge
