#include "gpforge/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <thread>

#include "gpforge/pipeline.hpp"
#include "gpforge/util.hpp"

namespace gpforge {

Score score(const std::vector<std::set<VertexId>>& found,
            const std::vector<std::set<VertexId>>& truth) {
  Score s;
  std::set<std::set<VertexId>> truthSet(truth.begin(), truth.end());
  std::size_t exact = 0, contained = 0;
  for (const auto& f : found) {
    if (truthSet.count(f)) ++exact;
    for (const auto& t : truth) {
      if (std::includes(t.begin(), t.end(), f.begin(), f.end())) {
        ++contained;
        break;
      }
    }
  }
  s.precision = found.empty() ? 1.0 : static_cast<double>(exact) / found.size();
  s.recall = truth.empty() ? 1.0 : static_cast<double>(exact) / truth.size();
  s.soundness = found.empty() ? 1.0 : static_cast<double>(contained) / found.size();
  return s;
}

namespace {

RunRecord execute_run(const GridCell& cell, std::size_t cellIdx, std::size_t runIdx,
                      std::uint64_t baseSeed, bool checkGuarantees) {
  RunRecord rec;
  rec.cell = cellIdx;
  rec.run = runIdx;
  rec.seed = mix_seed(baseSeed, cellIdx + 1, runIdx + 1);
  auto t0 = std::chrono::steady_clock::now();
  try {
    InstanceConfig icfg;
    icfg.pattern = cell.pattern;
    icfg.rule = cell.rule;
    icfg.numGps = cell.numGps;
    icfg.randomLinks = cell.links;
    icfg.seed = rec.seed;
    Instance inst = generate_instance(icfg);

    if (cell.numExamples < 1 || cell.numExamples > inst.truth.size())
      throw InputError("numExamples out of range");
    std::vector<std::size_t> idx(inst.truth.size());
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(mix_seed(rec.seed, 0xe7a51e5u));
    rng.shuffle(idx);
    std::vector<std::set<VertexId>> positives;
    for (std::size_t i = 0; i < cell.numExamples; ++i)
      positives.push_back(inst.truth[idx[i]]);

    MineOutput out = run_pipeline(inst.graph, positives, cell.k, cell.sampleFrac,
                                  mix_seed(rec.seed, 0x5a11));
    std::vector<std::set<VertexId>> found;
    for (const GpResult& gp : out.gps) found.push_back(gp.vertexSet);
    rec.score = score(found, inst.truth);

    if (checkGuarantees) {
      rec.guarantees = check_soundness_conditions(inst.graph, positives, inst.truth,
                                              out.cores, cell.k);
      rec.guaranteesChecked = true;
    }
  } catch (const std::exception& e) {
    rec.score = {0.0, 0.0, 0.0};
    rec.error = e.what();
  }
  rec.wallMs = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
  return rec;
}

void accumulate(CellStats& st, const std::vector<const RunRecord*>& recs) {
  st.runs = recs.size();
  auto meanDev = [&](auto get, double& mean, double& dev) {
    double sum = 0;
    for (const RunRecord* r : recs) sum += get(*r);
    mean = recs.empty() ? 0.0 : sum / recs.size();
    double sq = 0;
    for (const RunRecord* r : recs) {
      double d = get(*r) - mean;
      sq += d * d;
    }
    dev = recs.size() > 1 ? std::sqrt(sq / (recs.size() - 1)) : 0.0;
  };
  meanDev([](const RunRecord& r) { return r.score.precision; }, st.meanPrecision,
          st.stddevPrecision);
  meanDev([](const RunRecord& r) { return r.score.recall; }, st.meanRecall,
          st.stddevRecall);
  meanDev([](const RunRecord& r) { return r.score.soundness; }, st.meanSoundness,
          st.stddevSoundness);
}

}  // namespace

ExperimentResult run_experiment(const std::vector<GridCell>& cells, std::size_t runs,
                                std::uint64_t baseSeed, const ExperimentOptions& opts) {
  if (runs < 1) throw InputError("runs must be >= 1");
  ExperimentResult result;
  result.cells = cells;
  result.baseSeed = baseSeed;
  result.records.resize(cells.size() * runs);

  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      std::size_t task = cursor.fetch_add(1);
      if (task >= result.records.size()) return;
      std::size_t cellIdx = task / runs;
      std::size_t runIdx = task % runs;
      result.records[task] =
          execute_run(cells[cellIdx], cellIdx, runIdx, baseSeed, opts.checkGuarantees);
    }
  };

  unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (std::size_t c = 0; c < cells.size(); ++c) {
    CellStats st;
    st.cell = cells[c];
    std::vector<const RunRecord*> recs;
    for (std::size_t r = 0; r < runs; ++r) recs.push_back(&result.records[c * runs + r]);
    accumulate(st, recs);
    result.stats.push_back(st);
  }
  return result;
}

namespace {

void writeHeaderComment(std::ostream& out, const ExperimentResult& r) {
  out << "# base_seed=" << r.baseSeed << " cells=" << r.cells.size()
      << " runs_per_cell=" << (r.cells.empty() ? 0 : r.records.size() / r.cells.size())
      << " matching=exact-vertex-set\n";
}

void printDouble(std::ostream& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  out << buf;
}

}  // namespace

void write_runs_csv(std::ostream& out, const ExperimentResult& r) {
  writeHeaderComment(out, r);
  out << "pattern,rule,links,examples,k,frac,run,precision,recall,soundness\n";
  for (const RunRecord& rec : r.records) {
    const GridCell& c = r.cells[rec.cell];
    out << pattern_name(c.pattern) << ',' << rule_name(c.rule) << ',' << c.links << ','
        << c.numExamples << ',' << c.k << ',';
    printDouble(out, c.sampleFrac);
    out << ',' << rec.run << ',';
    printDouble(out, rec.score.precision);
    out << ',';
    printDouble(out, rec.score.recall);
    out << ',';
    printDouble(out, rec.score.soundness);
    out << '\n';
  }
}

void write_stats_csv(std::ostream& out, const ExperimentResult& r) {
  writeHeaderComment(out, r);
  out << "pattern,rule,links,examples,k,frac,runs,mean_precision,stddev_precision,"
         "mean_recall,stddev_recall,mean_soundness\n";
  for (const CellStats& st : r.stats) {
    const GridCell& c = st.cell;
    out << pattern_name(c.pattern) << ',' << rule_name(c.rule) << ',' << c.links << ','
        << c.numExamples << ',' << c.k << ',';
    printDouble(out, c.sampleFrac);
    out << ',' << st.runs << ',';
    printDouble(out, st.meanPrecision);
    out << ',';
    printDouble(out, st.stddevPrecision);
    out << ',';
    printDouble(out, st.meanRecall);
    out << ',';
    printDouble(out, st.stddevRecall);
    out << ',';
    printDouble(out, st.meanSoundness);
    out << '\n';
  }
}

void write_timings_csv(std::ostream& out, const ExperimentResult& r) {
  writeHeaderComment(out, r);
  out << "pattern,rule,links,examples,k,frac,run,wall_ms,error\n";
  for (const RunRecord& rec : r.records) {
    const GridCell& c = r.cells[rec.cell];
    out << pattern_name(c.pattern) << ',' << rule_name(c.rule) << ',' << c.links << ','
        << c.numExamples << ',' << c.k << ',';
    printDouble(out, c.sampleFrac);
    out << ',' << rec.run << ',';
    printDouble(out, rec.wallMs);
    out << ',' << rec.error << '\n';
  }
}

}  // namespace gpforge
