#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "gpforge/evaluation.hpp"
#include "fixtures.hpp"

using namespace gpforge;

TEST_CASE("scoring conventions") {
  std::vector<std::set<VertexId>> truth = {{1, 2, 3}, {4, 5, 6}};

  Score perfect = score(truth, truth);
  CHECK(perfect.precision == 1.0);
  CHECK(perfect.recall == 1.0);
  CHECK(perfect.soundness == 1.0);

  Score nothing = score({}, truth);
  CHECK(nothing.precision == 1.0);
  CHECK(nothing.recall == 0.0);
  CHECK(nothing.soundness == 1.0);

  Score half = score({{1, 2, 3}, {4, 5}}, truth);
  CHECK(half.precision == 0.5);
  CHECK(half.recall == 0.5);
  CHECK(half.soundness == 1.0);

  Score stray = score({{1, 2, 9}}, truth);
  CHECK(stray.precision == 0.0);
  CHECK(stray.soundness == 0.0);
}

TEST_CASE("experiment on link-free instances recovers every pattern") {
  GridCell cell;
  cell.pattern = PatternKind::BP1;
  cell.rule = RuleKind::Strong;
  cell.links = 0;
  cell.numExamples = 3;
  cell.numGps = 5;
  ExperimentResult r = run_experiment({cell}, 3, 424242);
  REQUIRE(r.stats.size() == 1);
  CHECK(r.stats[0].meanPrecision == 1.0);
  CHECK(r.stats[0].meanRecall == 1.0);
  CHECK(r.stats[0].meanSoundness == 1.0);
  for (const RunRecord& rec : r.records) CHECK(rec.error.empty());
}

TEST_CASE("scores stay bounded and precision never exceeds soundness") {
  GridCell cell;
  cell.pattern = PatternKind::BP2;
  cell.rule = RuleKind::Weak;
  cell.links = 8;
  cell.numGps = 5;
  ExperimentResult r = run_experiment({cell}, 5, 99);
  for (const RunRecord& rec : r.records) {
    CHECK(rec.score.precision >= 0.0);
    CHECK(rec.score.precision <= 1.0);
    CHECK(rec.score.recall >= 0.0);
    CHECK(rec.score.recall <= 1.0);
    CHECK(rec.score.soundness >= 0.0);
    CHECK(rec.score.soundness <= 1.0);
    CHECK(rec.score.precision <= rec.score.soundness + 1e-12);
  }
}

TEST_CASE("single-run cells report zero deviation") {
  GridCell cell;
  cell.numGps = 4;
  cell.links = 2;
  ExperimentResult r = run_experiment({cell}, 1, 5);
  CHECK(r.stats[0].stddevPrecision == 0.0);
  CHECK(r.stats[0].stddevRecall == 0.0);
}

TEST_CASE("a failing cell scores zero with an error note") {
  GridCell bad;
  bad.numGps = 1;  // one GP leaves no cross pairs for random links
  bad.links = 10;
  ExperimentResult r = run_experiment({bad}, 2, 1);
  for (const RunRecord& rec : r.records) {
    CHECK_FALSE(rec.error.empty());
    CHECK(rec.score.precision == 0.0);
    CHECK(rec.score.recall == 0.0);
  }
  CHECK(r.stats[0].meanRecall == 0.0);
}

namespace {

std::string runs_csv(const ExperimentResult& r) {
  std::ostringstream out;
  write_runs_csv(out, r);
  return out.str();
}

std::string stats_csv(const ExperimentResult& r) {
  std::ostringstream out;
  write_stats_csv(out, r);
  return out.str();
}

}  // namespace

TEST_CASE("experiments are deterministic and thread count invariant") {
  std::vector<GridCell> cells(2);
  cells[0].pattern = PatternKind::BP1;
  cells[0].rule = RuleKind::Strong;
  cells[0].links = 5;
  cells[0].numGps = 5;
  cells[1].pattern = PatternKind::WP2;
  cells[1].rule = RuleKind::Chain;
  cells[1].links = 5;
  cells[1].numGps = 5;

  ExperimentOptions serial;
  serial.threads = 1;
  ExperimentOptions parallel;
  parallel.threads = 4;

  ExperimentResult a = run_experiment(cells, 4, 2024, serial);
  ExperimentResult b = run_experiment(cells, 4, 2024, serial);
  ExperimentResult c = run_experiment(cells, 4, 2024, parallel);
  CHECK(runs_csv(a) == runs_csv(b));
  CHECK(runs_csv(a) == runs_csv(c));
  CHECK(stats_csv(a) == stats_csv(c));

  ExperimentResult other = run_experiment(cells, 4, 2025, serial);
  CHECK(runs_csv(a) != runs_csv(other));
}

TEST_CASE("csv layout") {
  GridCell cell;
  cell.numGps = 4;
  cell.links = 0;
  ExperimentResult r = run_experiment({cell}, 2, 3);
  std::string runs = runs_csv(r);
  CHECK(runs.find("# base_seed=3") != std::string::npos);
  CHECK(runs.find("pattern,rule,links,examples,k,frac,run,precision,recall,soundness") !=
        std::string::npos);
  std::string stats = stats_csv(r);
  CHECK(stats.find("mean_precision") != std::string::npos);
  std::ostringstream tout;
  write_timings_csv(tout, r);
  CHECK(tout.str().find("wall_ms") != std::string::npos);
}

TEST_CASE("guarantee checking can ride along with a run") {
  GridCell cell;
  cell.pattern = PatternKind::BP1;
  cell.rule = RuleKind::Strong;
  cell.links = 0;
  cell.numGps = 4;
  ExperimentOptions opts;
  opts.checkGuarantees = true;
  ExperimentResult r = run_experiment({cell}, 3, 11, opts);
  for (const RunRecord& rec : r.records) {
    REQUIRE(rec.guaranteesChecked);
    if (rec.guarantees.all()) CHECK(rec.score.soundness == 1.0);
  }
}
