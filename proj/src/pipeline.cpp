#include "gpforge/pipeline.hpp"

#include <map>

namespace gpforge {

MineOutput run_pipeline(const LabeledDigraph& host,
                        const std::vector<std::set<VertexId>>& positives,
                        std::size_t k, double sampleFrac, std::uint64_t seed) {
  if (positives.empty()) throw InputError("at least one positive example required");
  for (const auto& p : positives)
    if (p.empty()) throw InputError("positive example with empty vertex set");

  MineOutput out;
  NegativeEdges ne = negative_edges(host, positives);
  std::vector<LabeledDigraph> posGraphs;
  for (const auto& p : positives) posGraphs.push_back(host.induced(p));
  out.negatives = extract_negative_examples_from(ne.annotated, ne.edges, posGraphs, k,
                                                 sampleFrac, seed);
  out.lattice = build_lattice(posGraphs, out.negatives);

  std::map<CanonicalCode, LabeledDigraph> byCode;
  for (const Hypothesis& h : out.lattice.hypotheses)
    for (LabeledDigraph& c : relax_hypothesis(h.graph, out.negatives))
      byCode.emplace(canonical_form(c, MatchMode::LabelsOnly), std::move(c));
  for (auto& [code, g] : byCode) out.cores.push_back(std::move(g));

  // Negative examples are capped at k vertices, so they cannot constrain any
  // larger shape: relaxation may emit oversized "cores" that no negative
  // could ever reject, and the soundness guarantee does not cover them. Mine
  // only with cores inside the bound; the full set is still reported.
  std::vector<LabeledDigraph> usable;
  for (const LabeledDigraph& c : out.cores)
    if (c.vertexCount() <= k) usable.push_back(c);

  out.gps = mine_gps(host, usable);
  return out;
}

}  // namespace gpforge
