#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpforge/evaluation.hpp"
#include "gpforge/pipeline.hpp"
#include "gpforge/util.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace gpforge;

namespace {

constexpr std::uint64_t kDefaultSeed = 20060101;

unsigned threadCount() {
  if (const char* env = std::getenv("GPFORGE_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return 1;
}

std::vector<std::set<VertexId>> readExamples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json arr = json::parse(in, nullptr, true, true);
  if (!arr.is_array() || arr.empty())
    throw InputError(path + ": expected a nonempty JSON array of vertex-id arrays");
  std::vector<std::set<VertexId>> out;
  for (const auto& gp : arr) {
    if (!gp.is_array() || gp.empty())
      throw InputError(path + ": each example must be a nonempty array of vertex ids");
    std::set<VertexId> ids;
    for (const auto& v : gp) ids.insert(v.get<VertexId>());
    out.push_back(std::move(ids));
  }
  return out;
}

json graphJson(const LabeledDigraph& g) {
  json vs = json::array();
  for (const Vertex& v : g.vertices()) vs.push_back({v.id, v.label});
  json es = json::array();
  for (const Edge& e : g.edges()) es.push_back({e.src, e.dst, e.label});
  return {{"vertices", vs}, {"edges", es}};
}

int cmdMine(const std::string& graphPath, const std::string& examplesPath,
            const std::string& outPath, std::size_t k, double frac,
            std::uint64_t seed, const std::string& latticePath,
            const std::string& negativesPath) {
  LabeledDigraph host = parse_graph_file(graphPath);
  std::vector<std::set<VertexId>> positives = readExamples(examplesPath);
  MineOutput out = run_pipeline(host, positives, k, frac, seed);

  json results = json::array();
  for (const GpResult& gp : out.gps) {
    json entry = {{"vertex_set", gp.vertexSet},
                  {"core_code", code_hex(gp.coreCode)}};
    for (const LabeledDigraph& c : out.cores) {
      if (canonical_form(c, MatchMode::LabelsOnly) == gp.coreCode) {
        json cg = graphJson(c);
        entry["core_vertices"] = cg["vertices"];
        entry["core_edges"] = cg["edges"];
        break;
      }
    }
    results.push_back(std::move(entry));
  }
  {
    json doc = {{"config",
                 {{"graph", graphPath},
                  {"examples", examplesPath},
                  {"k", k},
                  {"sample_frac", frac},
                  {"seed", seed}}},
                {"gps", results}};
    std::ofstream o(outPath);
    if (!o) throw InputError("cannot write " + outPath);
    o << doc.dump(2) << '\n';
  }

  if (!latticePath.empty()) {
    json lat = json::array();
    for (const Hypothesis& h : out.lattice.elements) {
      json g = graphJson(h.graph);
      json parents = json::array();
      for (const CanonicalCode& p : h.parents) parents.push_back(code_hex(p));
      lat.push_back({{"level", h.level},
                     {"canonical_code",
                      code_hex(canonical_form(h.graph, MatchMode::LabelsOnly))},
                     {"vertices", g["vertices"]},
                     {"edges", g["edges"]},
                     {"parents", parents}});
    }
    std::ofstream o(latticePath);
    if (!o) throw InputError("cannot write " + latticePath);
    o << lat.dump(2) << '\n';
  }

  if (!negativesPath.empty()) {
    std::ofstream o(negativesPath);
    if (!o) throw InputError("cannot write " + negativesPath);
    for (std::size_t i = 0; i < out.negatives.size(); ++i) {
      o << "# negative example " << i << '\n';
      write_graph_text(o, out.negatives[i], /*withNegTokens=*/true);
    }
  }

  std::cout << "negative examples: " << out.negatives.size() << '\n'
            << "hypotheses:        " << out.lattice.hypotheses.size() << '\n'
            << "cores:             " << out.cores.size() << '\n'
            << "gps:               " << out.gps.size() << '\n'
            << "results written to " << outPath << '\n';
  return 0;
}

int cmdSynth(const InstanceConfig& cfg, const std::string& outDir) {
  Instance inst = generate_instance(cfg);
  write_instance(inst, outDir);
  std::cout << "pattern " << pattern_name(cfg.pattern) << " rule "
            << rule_name(cfg.rule) << " seed " << cfg.seed << '\n'
            << "vertices: " << inst.graph.vertexCount() << '\n'
            << "edges:    " << inst.graph.edgeCount() << '\n'
            << "gps:      " << inst.truth.size() << '\n'
            << "bundle written to " << outDir << '\n';
  return 0;
}

std::vector<std::set<VertexId>> readVertexSets(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json doc = json::parse(in);
  json arr;
  if (doc.is_object() && doc.contains("gps")) {
    arr = json::array();
    for (const auto& gp : doc["gps"]) arr.push_back(gp.at("vertex_set"));
  } else {
    arr = doc;
  }
  std::vector<std::set<VertexId>> out;
  for (const auto& gp : arr) {
    std::set<VertexId> ids;
    for (const auto& v : gp) ids.insert(v.get<VertexId>());
    out.push_back(std::move(ids));
  }
  return out;
}

int cmdScore(const std::string& foundPath, const std::string& truthPath) {
  Score s = score(readVertexSets(foundPath), readVertexSets(truthPath));
  std::printf("precision %.6f\nrecall    %.6f\nsoundness %.6f\n", s.precision,
              s.recall, s.soundness);
  return 0;
}

struct BenchArgs {
  std::string figure;
  std::vector<std::string> patterns;
  std::vector<std::size_t> links;
  std::vector<std::size_t> examples;
  std::size_t runs = 10;
  std::size_t k = 4;
  std::size_t numGps = 20;
  double frac = 1.0;
  std::uint64_t baseSeed = kDefaultSeed;
  std::string outDir = "bench-out";
};

std::vector<GridCell> benchCells(const BenchArgs& a) {
  std::vector<std::size_t> figLinks = {10, 25, 50, 75, 100, 150, 200};
  std::vector<GridCell> cells;
  auto add = [&](PatternKind p, RuleKind r, std::size_t links, std::size_t ex,
                 double frac) {
    GridCell c;
    c.pattern = p;
    c.rule = r;
    c.links = links;
    c.numExamples = ex;
    c.k = a.k;
    c.sampleFrac = frac;
    c.numGps = a.numGps;
    cells.push_back(c);
  };
  auto ruleFor = [](PatternKind p) {
    return (p == PatternKind::WP1 || p == PatternKind::WP2) ? RuleKind::Chain
                                                            : RuleKind::Strong;
  };
  std::vector<PatternKind> allPatterns = {PatternKind::WP1, PatternKind::WP2,
                                          PatternKind::BP1, PatternKind::BP2};

  if (!a.figure.empty()) {
    if (a.figure == "fig8") {
      for (PatternKind p : allPatterns)
        for (std::size_t l : figLinks) add(p, ruleFor(p), l, 3, 1.0);
    } else if (a.figure == "fig9") {
      for (PatternKind p : {PatternKind::BP1, PatternKind::BP2})
        for (RuleKind r : {RuleKind::Strong, RuleKind::Weak})
          for (std::size_t l : figLinks) add(p, r, l, 3, 1.0);
    } else if (a.figure == "fig10") {
      for (PatternKind p : allPatterns)
        for (std::size_t ex : {1, 2, 3, 4, 5}) add(p, ruleFor(p), 50, ex, 1.0);
    } else if (a.figure == "fig11") {
      for (PatternKind p : allPatterns)
        for (std::size_t l : figLinks) add(p, ruleFor(p), l, 3, 0.1);
    } else {
      throw InputError("unknown preset '" + a.figure +
                       "' (expected fig8|fig9|fig10|fig11)");
    }
    return cells;
  }

  std::vector<PatternKind> patterns;
  if (a.patterns.empty())
    patterns = allPatterns;
  else
    for (const std::string& s : a.patterns) patterns.push_back(pattern_from_name(s));
  std::vector<std::size_t> links = a.links.empty() ? std::vector<std::size_t>{50} : a.links;
  std::vector<std::size_t> examples =
      a.examples.empty() ? std::vector<std::size_t>{3} : a.examples;
  for (PatternKind p : patterns)
    for (std::size_t l : links)
      for (std::size_t ex : examples) add(p, ruleFor(p), l, ex, a.frac);
  return cells;
}

int cmdBench(const BenchArgs& a) {
  std::vector<GridCell> cells = benchCells(a);
  ExperimentOptions opts;
  opts.threads = threadCount();
  ExperimentResult result = run_experiment(cells, a.runs, a.baseSeed, opts);

  fs::create_directories(a.outDir);
  {
    std::ofstream o(fs::path(a.outDir) / "runs.csv");
    write_runs_csv(o, result);
  }
  {
    std::ofstream o(fs::path(a.outDir) / "stats.csv");
    write_stats_csv(o, result);
  }
  {
    std::ofstream o(fs::path(a.outDir) / "timings.csv");
    write_timings_csv(o, result);
  }
  std::size_t failures = 0;
  for (const RunRecord& r : result.records)
    if (!r.error.empty()) ++failures;
  std::cout << "cells: " << cells.size() << "  runs: " << result.records.size()
            << "  failures: " << failures << "  base_seed: " << a.baseSeed << '\n'
            << "csv written to " << a.outDir << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized graph pattern mining from user examples"};
  app.require_subcommand(1);

  // mine
  auto* mine = app.add_subcommand("mine", "mine GPs from a graph and examples");
  std::string graphPath, examplesPath, outPath = "results.json";
  std::string latticePath, negativesPath;
  std::size_t k = 4;
  double frac = 1.0;
  std::uint64_t seed = kDefaultSeed;
  mine->add_option("--graph", graphPath, "host graph (text format)")->required();
  mine->add_option("--examples", examplesPath, "positive examples JSON")->required();
  mine->add_option("--out", outPath, "results JSON path");
  mine->add_option("--k", k, "max negative example size (vertices)");
  mine->add_option("--sample-frac", frac, "fraction of partial examples kept per round");
  mine->add_option("--seed", seed, "sampling seed");
  mine->add_option("--dump-lattice", latticePath, "write lattice JSON here");
  mine->add_option("--dump-negatives", negativesPath, "write negative examples here");

  // synth
  auto* synth = app.add_subcommand("synth", "generate a synthetic instance bundle");
  std::string patternName = "bp1", ruleName = "strong", synthOut = "instance";
  InstanceConfig icfg;
  icfg.seed = kDefaultSeed;
  synth->add_option("--pattern", patternName, "wp1|wp2|bp1|bp2");
  synth->add_option("--rule", ruleName, "strong|weak|chain");
  synth->add_option("--num-gps", icfg.numGps, "number of planted GPs");
  synth->add_option("--links", icfg.randomLinks, "random cross-GP links");
  synth->add_option("--seed", icfg.seed, "generator seed");
  synth->add_option("--size-spread", icfg.sizeSpread,
                    "GP sizes drawn from [base, base+spread]; 0 = family default");
  synth->add_option("--out", synthOut, "output directory");

  // score
  auto* scoreCmd = app.add_subcommand("score", "score found GPs against ground truth");
  std::string foundPath, truthPath;
  scoreCmd->add_option("--found", foundPath, "results JSON or array of vertex sets")
      ->required();
  scoreCmd->add_option("--truth", truthPath, "truth JSON")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "run experiment grids");
  BenchArgs bargs;
  bench->add_option("--figure", bargs.figure, "preset grid: fig8|fig9|fig10|fig11");
  bench->add_option("--patterns", bargs.patterns, "patterns for a custom grid");
  bench->add_option("--links-list", bargs.links, "links values for a custom grid");
  bench->add_option("--examples-list", bargs.examples, "example counts for a custom grid");
  bench->add_option("--runs", bargs.runs, "runs per cell");
  bench->add_option("--k", bargs.k, "max negative example size");
  bench->add_option("--num-gps", bargs.numGps, "planted GPs per instance");
  bench->add_option("--frac", bargs.frac, "sample fraction for custom grids");
  bench->add_option("--base-seed", bargs.baseSeed, "base seed");
  bench->add_option("--out-dir", bargs.outDir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(mine))
      return cmdMine(graphPath, examplesPath, outPath, k, frac, seed, latticePath,
                     negativesPath);
    if (app.got_subcommand(synth)) {
      icfg.pattern = pattern_from_name(patternName);
      icfg.rule = rule_from_name(ruleName);
      return cmdSynth(icfg, synthOut);
    }
    if (app.got_subcommand(scoreCmd)) return cmdScore(foundPath, truthPath);
    if (app.got_subcommand(bench)) return cmdBench(bargs);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 1;
}
