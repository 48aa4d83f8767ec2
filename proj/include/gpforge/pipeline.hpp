#pragma once

#include "gpforge/core_gen.hpp"
#include "gpforge/gp_mining.hpp"
#include "gpforge/neg_examples.hpp"

namespace gpforge {

struct MineOutput {
  std::vector<LabeledDigraph> negatives;
  Lattice lattice;
  std::vector<LabeledDigraph> cores;
  std::vector<GpResult> gps;
};

// Full pipeline: negative-example extraction, lattice + relaxation into
// cores, GP mining.
MineOutput run_pipeline(const LabeledDigraph& host,
                        const std::vector<std::set<VertexId>>& positives,
                        std::size_t k, double sampleFrac = 1.0,
                        std::uint64_t seed = 0);

}  // namespace gpforge
