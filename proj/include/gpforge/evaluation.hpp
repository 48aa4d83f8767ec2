#pragma once

#include <iosfwd>

#include "gpforge/gp_mining.hpp"
#include "gpforge/patterns.hpp"

namespace gpforge {

struct Score {
  double precision = 1.0;  // exact-set true positives / found (1.0 when found empty)
  double recall = 0.0;     // exact-set true positives / truth
  double soundness = 1.0;  // found sets contained in some truth set / found
};

Score score(const std::vector<std::set<VertexId>>& found,
            const std::vector<std::set<VertexId>>& truth);

struct GridCell {
  PatternKind pattern = PatternKind::BP1;
  RuleKind rule = RuleKind::Strong;
  std::size_t links = 0;
  std::size_t numExamples = 3;
  std::size_t k = 4;
  double sampleFrac = 1.0;
  std::size_t numGps = 20;
};

struct RunRecord {
  std::size_t cell = 0;
  std::size_t run = 0;
  std::uint64_t seed = 0;
  Score score;
  double wallMs = 0.0;
  std::string error;  // nonempty when the run failed and scored zero
  bool guaranteesChecked = false;
  GuaranteeReport guarantees;
};

struct CellStats {
  GridCell cell;
  std::size_t runs = 0;
  double meanPrecision = 0, stddevPrecision = 0;
  double meanRecall = 0, stddevRecall = 0;
  double meanSoundness = 0, stddevSoundness = 0;
};

struct ExperimentResult {
  std::vector<GridCell> cells;
  std::vector<RunRecord> records;  // cells * runs, ordered by (cell, run)
  std::vector<CellStats> stats;
  std::uint64_t baseSeed = 0;
};

struct ExperimentOptions {
  unsigned threads = 1;
  bool checkGuarantees = false;  // adds the soundness-guarantee condition report per run
};

// Deterministic for a given baseSeed: per-run seeds depend only on
// (baseSeed, cell index, run index), and records merge by index.
ExperimentResult run_experiment(const std::vector<GridCell>& cells, std::size_t runs,
                                std::uint64_t baseSeed,
                                const ExperimentOptions& opts = {});

void write_runs_csv(std::ostream& out, const ExperimentResult& r);
void write_stats_csv(std::ostream& out, const ExperimentResult& r);
void write_timings_csv(std::ostream& out, const ExperimentResult& r);

}  // namespace gpforge
