#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "dsta/bench.hpp"
#include "dsta/engine.hpp"
#include "dsta/errors.hpp"
#include "dsta/instance_io.hpp"
#include "dsta/kernels.hpp"
#include "dsta/problems.hpp"

namespace dsta::cli {

namespace {

// TSPLIB reference optima (integer distance conventions).
const std::map<std::string, double>& tsplib_optima() {
  static const std::map<std::string, double> table{
      {"gr96", 55209.0}, {"kroA100", 21282.0}, {"kroC100", 20749.0}, {"gr120", 6942.0}};
  return table;
}

struct Config {
  std::string problem;
  std::string file;
  std::vector<std::string> files;
  std::size_t random_n = 0;
  double density = 1.0;
  std::uint64_t instance_seed = 1;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::size_t> sizes;
  std::vector<int> budgets;
  std::vector<double> optima;
  std::vector<std::string> modes{"sta", "dsta"};
  std::string q;
  std::string c;

  StaParams params;
  std::string mode = "dsta";
  std::vector<std::string> operators;
  int trials = 1;
  std::string rounding = "real";
  std::string trace;
  std::string out;
  std::string kernel = "auto";
  unsigned threads = 0;
  bool timing = false;
};

void add_search_flags(CLI::App& app, Config& cfg) {
  auto& p = cfg.params;
  app.add_option("--mode", cfg.mode, "sta (simple) or dsta (dynamic)")
      ->check(CLI::IsMember({"sta", "dsta"}))
      ->capture_default_str();
  app.add_option("--se", p.search_enforcement, "search enforcement: samples per operator round")
      ->capture_default_str();
  app.add_option("--ma", p.swap_factor, "swap factor")->capture_default_str();
  app.add_option("--mb", p.shift_factor, "shift factor")->capture_default_str();
  app.add_option("--mc", p.symmetry_factor, "symmetry factor")->capture_default_str();
  app.add_option("--md", p.substitute_factor, "substitute factor")->capture_default_str();
  app.add_option("--p1", p.restore_probability, "restore probability")->capture_default_str();
  app.add_option("--p2", p.risk_probability, "risk probability")->capture_default_str();
  app.add_option("--iters", p.max_iterations, "outer iterations")->capture_default_str();
  app.add_option("--seed", p.seed, "base seed; trial seeds are derived from it")
      ->capture_default_str();
  app.add_option("--operators", cfg.operators,
                 "operator order, e.g. swap,shift,symmetry (default: all applicable)")
      ->delimiter(',');
  app.add_option("--rounding", cfg.rounding, "distance convention: real or tsplib")
      ->check(CLI::IsMember({"real", "tsplib"}))
      ->capture_default_str();
  app.add_option("--trace", cfg.trace, "write the convergence trace (CSV)");
  app.add_option("--out", cfg.out, "write result records (JSON lines)");
  app.add_option("--kernel", cfg.kernel, "objective kernels: auto, scalar or avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}))
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads for trials (0 = all cores)");
  app.add_flag("--timing", cfg.timing, "include wall times in result records");
}

void add_instance_flags(CLI::App& app, Config& cfg) {
  app.add_option("--file", cfg.file, "TSPLIB instance");
  app.add_option("--random", cfg.random_n, "random instance size (cities or vertices)");
  app.add_option("--density", cfg.density, "edge density of random graphs")->capture_default_str();
  app.add_option("--instance-seed", cfg.instance_seed, "seed of the random instance")
      ->capture_default_str();
  app.add_option("--n", cfg.n, "dimension (rosenbrock, dvs)");
  app.add_option("--m", cfg.m, "alphabet size (dvs)");
}

// Resolves flags that depend on the problem kind and validates everything.
void finalize(Config& cfg, Representation representation) {
  cfg.params.mode = parse_mode(cfg.mode);
  cfg.params.operators.clear();
  if (cfg.operators.empty()) {
    cfg.params.operators = {OperatorKind::Swap, OperatorKind::Shift, OperatorKind::Symmetry};
    if (representation == Representation::Value) {
      cfg.params.operators.push_back(OperatorKind::Substitute);
    }
  } else {
    for (const auto& name : cfg.operators) cfg.params.operators.push_back(parse_operator(name));
  }
  cfg.params.validate();
  if (cfg.trials < 1) throw InvalidParams("--trials must be >= 1");
  if (cfg.kernel == "scalar") kernels::select(kernels::Backend::Scalar);
  if (cfg.kernel == "avx2") kernels::select(kernels::Backend::Avx2);
}

std::string join_operators(const std::vector<OperatorKind>& ops) {
  std::string s;
  for (auto kind : ops) {
    if (!s.empty()) s += ',';
    s += to_string(kind);
  }
  return s;
}

void echo_config(std::ostream& out, const std::string& command, const Config& cfg,
                 const std::string& instance) {
  const auto& p = cfg.params;
  out << "# " << command << " " << cfg.problem << " instance=" << instance
      << " mode=" << to_string(p.mode) << " se=" << p.search_enforcement
      << " ma=" << p.swap_factor << " mb=" << p.shift_factor << " mc=" << p.symmetry_factor
      << " md=" << p.substitute_factor << " p1=" << format_double(p.restore_probability)
      << " p2=" << format_double(p.risk_probability) << " iters=" << p.max_iterations
      << " trials=" << cfg.trials << " seed=" << p.seed
      << " operators=" << join_operators(p.operators) << " rounding=" << cfg.rounding
      << " kernel=" << kernels::to_string(kernels::active().backend) << "\n";
}

TspInstance load_tsp(const std::string& path, const Config& cfg) {
  return build_distances(load_tsplib(path), parse_rounding(cfg.rounding));
}

// The instance selected by problem kind and instance flags.
ProblemInstance make_instance(const Config& cfg) {
  const std::string& kind = cfg.problem;
  if (kind == "tsp" || kind == "maxcut") {
    const bool from_file = !cfg.file.empty();
    if (from_file == (cfg.random_n != 0)) {
      throw InvalidParams(kind + " needs exactly one of --file or --random");
    }
    if (kind == "tsp") {
      if (from_file) return load_tsp(cfg.file, cfg);
      return random_instance(EuclideanTspSpec{cfg.random_n}, cfg.instance_seed);
    }
    if (from_file) return maxcut_from_tsp(load_tsp(cfg.file, cfg));
    return random_instance(WeightedGraphSpec{cfg.random_n, cfg.density}, cfg.instance_seed);
  }
  if (kind == "rosenbrock") {
    if (cfg.n == 0) throw InvalidParams("rosenbrock needs --n");
    return make_rosenbrock(cfg.n);
  }
  if (kind == "dvs") {
    if (cfg.n == 0 || cfg.m == 0) throw InvalidParams("dvs needs --n and --m");
    return random_instance(DvsSpec{cfg.n, cfg.m}, cfg.instance_seed);
  }
  throw InvalidParams("unknown problem '" + kind + "'");
}

Representation representation_of(const ProblemInstance& instance) {
  return std::holds_alternative<TspInstance>(instance) ? Representation::Permutation
                                                       : Representation::Value;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  return file;
}

void print_solution(std::ostream& out, const ProblemInstance& instance,
                    const std::vector<int>& solution, double cost) {
  if (std::holds_alternative<TspInstance>(instance)) {
    out << "best_cost " << format_double(cost) << "\ntour";
    for (int city : solution) out << ' ' << city + 1;
    out << "\n";
  } else if (const auto* graph = std::get_if<MaxCutInstance>(&instance)) {
    out << "best_cut " << format_double(graph->cut_from_qubo(cost)) << "\n";
    out << "best_cost " << format_double(cost) << "\nassignment";
    for (int v : solution) out << ' ' << (v == 0 ? -1 : 1);
    out << " 1\n";
  } else {
    const auto& dvs = std::get<DvsProblem>(instance);
    out << "best_cost " << format_double(cost) << "\nsolution";
    for (double v : dvs_decode(solution, dvs.alphabet)) out << ' ' << format_double(v);
    out << "\n";
  }
}

std::vector<ResultRecord> records_of(const std::string& instance, const StaParams& params,
                                     const TrialBatch& batch, bool timing) {
  std::vector<ResultRecord> records;
  for (const auto& run : batch.runs) {
    ResultRecord r;
    r.instance = instance;
    r.algorithm = params.mode;
    r.params = params;
    r.params.seed = run.seed;
    r.trial_seed = run.seed;
    r.best_cost = run.result.best_cost;
    if (timing) {
      r.wall_time_ms = std::chrono::duration<double, std::milli>(run.result.wall_time).count();
    }
    r.best_solution = run.result.best_solution;
    records.push_back(std::move(r));
  }
  return records;
}

int cmd_solve(Config& cfg, std::ostream& out) {
  const ProblemInstance instance = make_instance(cfg);
  finalize(cfg, representation_of(instance));
  const std::string name = instance_name(instance);
  echo_config(out, "solve", cfg, name);

  const auto objective = make_objective(instance);
  const TrialBatch batch = run_trials(*objective, cfg.params, cfg.trials, cfg.params.seed,
                                      cfg.threads);
  std::size_t best = 0;
  for (std::size_t i = 0; i < batch.runs.size(); ++i) {
    const auto& r = batch.runs[i];
    out << "# trial " << i << " seed=" << r.seed
        << " best_cost=" << format_double(r.result.best_cost) << " evaluations="
        << r.result.evaluations << " wall_ms="
        << std::chrono::duration<double, std::milli>(r.result.wall_time).count() << "\n";
    if (r.result.best_cost < batch.runs[best].result.best_cost) best = i;
  }
  print_solution(out, instance, batch.runs[best].result.best_solution,
                 batch.runs[best].result.best_cost);

  if (!cfg.trace.empty()) {
    auto file = open_output(cfg.trace);
    write_trace(batch.runs[best].result.trace, file);
  }
  if (!cfg.out.empty()) {
    auto file = open_output(cfg.out);
    write_results(records_of(name, cfg.params, batch, cfg.timing), file);
  }
  return kOk;
}

struct BenchInstance {
  ProblemInstance instance;
  std::optional<double> optimum;
  int budget = 0;  // 0 = --iters
};

std::string cell(std::optional<double> v) {
  if (!v) return "-";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", *v);
  return buffer;
}

std::string row(const std::vector<std::string>& cells) {
  static const int widths[] = {16, 12, 6, 14, 14, 14, 10, 10};
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::string c = cells[i];
    const int w = widths[std::min<std::size_t>(i, std::size(widths) - 1)];
    if (static_cast<int>(c.size()) < w) c.append(static_cast<std::size_t>(w) - c.size(), ' ');
    line += c;
    if (i + 1 < cells.size()) line += ' ';
  }
  while (!line.empty() && line.back() == ' ') line.pop_back();
  return line + "\n";
}

std::vector<BenchInstance> bench_suite(const Config& cfg) {
  std::vector<BenchInstance> suite;
  const std::string& kind = cfg.problem;
  if (kind == "rosenbrock") {
    if (!cfg.budgets.empty() && cfg.budgets.size() != cfg.sizes.size()) {
      throw InvalidParams("--budgets must list one budget per size");
    }
    for (std::size_t i = 0; i < cfg.sizes.size(); ++i) {
      suite.push_back({make_rosenbrock(cfg.sizes[i]), 0.0,
                       cfg.budgets.empty() ? 0 : cfg.budgets[i]});
    }
    return suite;
  }
  if (kind != "tsp" && kind != "maxcut") throw InvalidParams("unknown bench suite '" + kind + "'");
  if (!cfg.optima.empty() && cfg.optima.size() != cfg.files.size()) {
    throw InvalidParams("--optima must list one value per file");
  }
  for (std::size_t i = 0; i < cfg.files.size(); ++i) {
    TspInstance tsp = load_tsp(cfg.files[i], cfg);
    std::optional<double> optimum;
    if (!cfg.optima.empty()) {
      optimum = cfg.optima[i];
    } else if (kind == "tsp") {
      if (auto it = tsplib_optima().find(tsp.name()); it != tsplib_optima().end()) {
        optimum = it->second;
      }
    }
    if (kind == "tsp") {
      suite.push_back({std::move(tsp), optimum, 0});
    } else {
      suite.push_back({maxcut_from_tsp(tsp), optimum, 0});
    }
  }
  return suite;
}

int cmd_bench(Config& cfg, std::ostream& out) {
  const auto suite = bench_suite(cfg);
  const Representation representation =
      cfg.problem == "tsp" ? Representation::Permutation : Representation::Value;
  finalize(cfg, representation);
  std::vector<Mode> modes;
  for (const auto& m : cfg.modes) modes.push_back(parse_mode(m));
  echo_config(out, "bench", cfg, std::to_string(suite.size()) + "-instances");

  out << row({"instance", "optimum", "alg", "best", "mean", "std", "error%", "time_s"});
  std::vector<ResultRecord> records;
  for (const auto& entry : suite) {
    const std::string name = instance_name(entry.instance);
    const auto objective = make_objective(entry.instance);
    const auto* graph = std::get_if<MaxCutInstance>(&entry.instance);
    for (Mode mode : modes) {
      StaParams params = cfg.params;
      params.mode = mode;
      if (entry.budget > 0) params.max_iterations = entry.budget;
      const auto started = std::chrono::steady_clock::now();
      const TrialBatch batch = run_trials(*objective, params, cfg.trials, cfg.params.seed,
                                          cfg.threads);
      const double seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

      TrialStats stats = batch.stats;
      if (graph != nullptr) {
        std::vector<double> cuts;
        for (double v : stats.values) cuts.push_back(graph->cut_from_qubo(v));
        stats = summarize(cuts, Sense::Maximize);
      }
      if (entry.optimum) {
        if (graph != nullptr) {
          stats.error = maxcut_error(stats.best, *entry.optimum);
        } else if (*entry.optimum != 0.0) {
          stats.error = tsp_error(stats.best, *entry.optimum);
        } else if (stats.best == *entry.optimum) {
          stats.error = 0.0;
        }
      }
      char time_cell[32];
      std::snprintf(time_cell, sizeof(time_cell), "%.3f", seconds);
      out << row({name, cell(entry.optimum), params.mode == Mode::Simple ? "STA" : "DSTA",
                  cell(stats.best), cell(stats.mean), cell(stats.std), cell(stats.error),
                  time_cell});

      for (auto& r : records_of(name, params, batch, cfg.timing)) records.push_back(std::move(r));
      if (!cfg.trace.empty()) {
        auto file = open_output(cfg.trace + name + "-" + std::string(to_string(mode)) + ".csv");
        write_trace(batch.runs.front().result.trace, file);
      }
    }
  }
  if (!cfg.out.empty()) {
    auto file = open_output(cfg.out);
    write_results(records, file);
  }
  return kOk;
}

std::vector<double> parse_list(const std::string& text, char separator) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, separator)) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw InvalidParams("malformed number '" + item + "'");
    }
    values.push_back(v);
  }
  return values;
}

int cmd_oracle(Config& cfg, std::ostream& out) {
  if (cfg.kernel == "scalar") kernels::select(kernels::Backend::Scalar);
  if (cfg.kernel == "avx2") kernels::select(kernels::Backend::Avx2);
  if (cfg.problem == "qubo") {
    // Rows separated by ';', entries by ','.
    std::vector<double> q;
    std::stringstream rows(cfg.q);
    std::string r;
    while (std::getline(rows, r, ';')) {
      for (double v : parse_list(r, ',')) q.push_back(v);
    }
    const std::vector<double> c = parse_list(cfg.c, ',');
    const QuboOptimum best = brute_force_qubo(q, c);
    out << "optimum " << format_double(best.value) << "\n";
    for (const auto& x : best.optimizers) {
      out << "optimizer";
      for (int v : x) out << ' ' << (v == 0 ? -1 : 1);
      out << "\n";
    }
    return kOk;
  }

  const ProblemInstance instance = make_instance(cfg);
  if (const auto* tsp = std::get_if<TspInstance>(&instance)) {
    const TspOptimum best = brute_force_tsp(*tsp);
    out << "optimum " << format_double(best.cost) << "\ntour";
    for (int city : best.tour) out << ' ' << city + 1;
    out << "\n";
  } else if (const auto* graph = std::get_if<MaxCutInstance>(&instance)) {
    const QuboOptimum best = brute_force_qubo(graph->qubo_matrix(), graph->qubo_linear());
    out << "optimum " << format_double(graph->cut_from_qubo(best.value)) << "\n";
    out << "qubo_optimum " << format_double(best.value) << "\nassignment";
    for (int v : best.optimizers.front()) out << ' ' << (v == 0 ? -1 : 1);
    out << " 1\n";
  } else {
    const auto& dvs = std::get<DvsProblem>(instance);
    const DvsOptimum best = brute_force_dvs(dvs);
    out << "optimum " << format_double(best.value) << "\nsolution";
    for (double v : dvs_decode(best.optimizer, dvs.alphabet)) out << ' ' << format_double(v);
    out << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete state transition algorithm: solve, benchmark and verify"};
  app.require_subcommand(1);
  Config cfg;

  auto* solve = app.add_subcommand("solve", "solve one instance");
  solve->add_option("problem", cfg.problem, "tsp, maxcut, rosenbrock or dvs")
      ->required()
      ->check(CLI::IsMember({"tsp", "maxcut", "rosenbrock", "dvs"}));
  add_instance_flags(*solve, cfg);
  add_search_flags(*solve, cfg);
  solve->add_option("--trials", cfg.trials, "independent trials")->capture_default_str();

  auto* bench = app.add_subcommand("bench", "run a benchmark suite");
  bench->add_option("suite", cfg.problem, "rosenbrock, tsp or maxcut")
      ->required()
      ->check(CLI::IsMember({"rosenbrock", "tsp", "maxcut"}));
  bench->add_option("--files", cfg.files, "TSPLIB instances (tsp, maxcut)")->delimiter(',');
  bench->add_option("--optima", cfg.optima, "reference optima, one per file")->delimiter(',');
  bench->add_option("--sizes", cfg.sizes, "dimensions (rosenbrock)")->delimiter(',');
  bench->add_option("--budgets", cfg.budgets, "iterations per size (rosenbrock)")->delimiter(',');
  bench->add_option("--modes", cfg.modes, "algorithms to run")
      ->delimiter(',')
      ->check(CLI::IsMember({"sta", "dsta"}))
      ->capture_default_str();
  add_search_flags(*bench, cfg);
  int bench_trials = 20;
  bench->add_option("--trials", bench_trials, "independent trials per instance and mode")
      ->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "exact optimum by enumeration");
  oracle->add_option("problem", cfg.problem, "tsp, maxcut, qubo, rosenbrock or dvs")
      ->required()
      ->check(CLI::IsMember({"tsp", "maxcut", "qubo", "rosenbrock", "dvs"}));
  add_instance_flags(*oracle, cfg);
  oracle->add_option("--q", cfg.q, "QUBO matrix, rows separated by ';'");
  oracle->add_option("--c", cfg.c, "QUBO linear term, comma separated");
  oracle->add_option("--rounding", cfg.rounding, "distance convention: real or tsplib")
      ->check(CLI::IsMember({"real", "tsplib"}));
  oracle->add_option("--kernel", cfg.kernel, "objective kernels: auto, scalar or avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    if (solve->parsed()) return cmd_solve(cfg, out);
    if (bench->parsed()) {
      cfg.trials = bench_trials;
      return cmd_bench(cfg, out);
    }
    return cmd_oracle(cfg, out);
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kUnsupported;
  } catch (const UnsupportedType& e) {
    err << "error: " << e.what() << "\n";
    return kUnsupported;
  } catch (const DegenerateState& e) {
    err << "error: " << e.what() << "\n";
    return kUnsupported;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
}

}  // namespace dsta::cli
