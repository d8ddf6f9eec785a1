// Command-line front end for the progressive simplification library.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "progsimp/bench.hpp"
#include "progsimp/error_matrix.hpp"
#include "progsimp/graph_source.hpp"
#include "progsimp/heuristics.hpp"
#include "progsimp/io.hpp"
#include "progsimp/progressive.hpp"
#include "progsimp/scales.hpp"
#include "progsimp/svg.hpp"
#include "progsimp/synth.hpp"
#include "progsimp/validate.hpp"

namespace ps = progsimp;
using json = nlohmann::json;

namespace {

struct InputOptions {
  std::string path;
  std::string synth;
  std::size_t n = 100;
  std::uint64_t seed = 42;

  void attach(CLI::App* cmd) {
    cmd->add_option("-i,--input", path, "CSV file with x,y rows");
    cmd->add_option("--synth", synth, "generate a curve instead: zigzag, random-walk, noisy-circle");
    cmd->add_option("-n,--points", n, "vertex count for --synth");
    cmd->add_option("--seed", seed, "random seed for --synth");
  }

  ps::Curve load() const {
    if (!path.empty() && !synth.empty()) throw ps::InputError("give either --input or --synth");
    if (!synth.empty()) return ps::synth_curve(ps::parse_synth_kind(synth), n, seed);
    if (path.empty()) throw ps::InputError("an input curve is required (--input or --synth)");
    auto r = ps::read_curve_file(path);
    if (r.dropped > 0) {
      std::cerr << "warning: collapsed " << r.dropped << " duplicate consecutive point(s)\n";
    }
    return std::move(r.curve);
  }
};

// Writes to the named file, or stdout for "" or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw ps::InputError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    out.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

ps::GraphStrategy parse_strategy(const std::string& s) {
  if (s == "matrix") return ps::GraphStrategy::ErrorMatrix;
  if (s == "chan-chin") return ps::GraphStrategy::ChanChin;
  throw ps::InputError("unknown graph strategy '" + s + "' (expected matrix or chan-chin)");
}

double parse_cutoff(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !(v >= 0.0)) throw ps::InputError("cutoff must be a number >= 0 or 'inf'");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Progressive polygonal-curve simplification"};
  app.require_subcommand(1);

  InputOptions input;
  std::string measure = "hausdorff";
  unsigned threads = 1;
  std::string output;

  // errors
  auto* errors_cmd = app.add_subcommand("errors", "export the shortcut error matrix as i,j,epsilon");
  input.attach(errors_cmd);
  std::string method = "hull";
  errors_cmd->add_option("--measure", measure, "hausdorff, frechet or area");
  errors_cmd->add_option("--method", method, "naive or hull (hull: Hausdorff only)");
  errors_cmd->add_option("-t,--threads", threads, "worker threads (0 = all cores)");
  errors_cmd->add_option("-o,--output", output, "output file (default stdout)");

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "export the shortcut interval set as i,x,y");
  input.attach(graph_cmd);
  double graph_eps = 0.0;
  std::string strategy = "matrix";
  std::string pgm;
  graph_cmd->add_option("-e,--epsilon", graph_eps, "tolerance")->required();
  graph_cmd->add_option("--measure", measure, "hausdorff, frechet or area");
  graph_cmd->add_option("--strategy", strategy, "matrix or chan-chin");
  graph_cmd->add_option("--pgm", pgm, "also write a PGM raster of the shortcut matrix");
  graph_cmd->add_option("-t,--threads", threads, "worker threads (0 = all cores)");
  graph_cmd->add_option("-o,--output", output, "output file (default stdout)");

  // simplify
  auto* simplify_cmd = app.add_subcommand("simplify", "compute a progressive simplification");
  input.attach(simplify_cmd);
  std::string algo = "optimal";
  std::string eps_list;
  std::string weights_list;
  std::size_t num_scales = 0;
  std::string sampling = "decile";
  std::string cutoff = "4";
  std::string out_dir = ".";
  simplify_cmd->add_option("--algo", algo,
                           "optimal, greedy-td, greedy-bu, greedy-bu-cao, dp-td or dp-bu");
  auto* eps_opt = simplify_cmd->add_option("--epsilons", eps_list, "comma-separated tolerances");
  auto* count_opt = simplify_cmd->add_option("--num-scales", num_scales, "number of sampled tolerances");
  eps_opt->excludes(count_opt);
  simplify_cmd->add_option("--sampling", sampling, "decile or all (with --num-scales)");
  simplify_cmd->add_option("--weights", weights_list, "comma-separated scale weights (optimal only)");
  simplify_cmd->add_option("--measure", measure, "hausdorff, frechet or area");
  simplify_cmd->add_option("--strategy", strategy, "matrix or chan-chin");
  simplify_cmd->add_option("--cutoff", cutoff, "range-query cutoff constant c (number or inf)");
  simplify_cmd->add_option("-t,--threads", threads, "worker threads (0 = all cores)");
  simplify_cmd->add_option("-d,--out-dir", out_dir, "directory for simplification.csv and summary.json");

  // continuous
  auto* cont_cmd = app.add_subcommand("continuous", "minimal continuous progressive simplification");
  input.attach(cont_cmd);
  cont_cmd->add_option("--measure", measure, "hausdorff, frechet or area");
  cont_cmd->add_option("-t,--threads", threads, "worker threads (0 = all cores)");
  cont_cmd->add_option("-o,--output", output, "output file (default stdout)");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "compare algorithms on curve prefixes");
  std::string bench_input;
  std::string bench_kind = "random-walk";
  std::string bench_sizes = "100";
  std::string bench_algos;
  std::uint64_t bench_seed = 42;
  std::size_t bench_scales = 10;
  bool no_time = false;
  bench_cmd->add_option("-i,--input", bench_input, "CSV trajectory (default: synthetic)");
  bench_cmd->add_option("--synth", bench_kind, "synthetic curve kind");
  bench_cmd->add_option("--seed", bench_seed, "random seed");
  bench_cmd->add_option("--sizes", bench_sizes, "comma-separated prefix lengths");
  bench_cmd->add_option("--num-scales", bench_scales, "number of sampled tolerances");
  bench_cmd->add_option("--sampling", sampling, "decile or all");
  bench_cmd->add_option("--algos", bench_algos, "comma-separated algorithms (default: all)");
  bench_cmd->add_option("--measure", measure, "hausdorff, frechet or area");
  bench_cmd->add_option("--cutoff", cutoff, "range-query cutoff constant c");
  bench_cmd->add_option("-t,--threads", threads, "worker threads (0 = all cores)");
  bench_cmd->add_flag("--no-time", no_time, "omit the timing column");
  bench_cmd->add_option("-o,--output", output, "output file (default stdout)");

  // render
  auto* render_cmd = app.add_subcommand("render", "draw a simplification as SVG");
  input.attach(render_cmd);
  std::string simp_path;
  render_cmd->add_option("-s,--simplification", simp_path, "CSV written by simplify");
  render_cmd->add_option("-o,--output", output, "SVG file (default stdout)");

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "write a synthetic curve as CSV");
  std::string kind = "random-walk";
  synth_cmd->add_option("--kind", kind, "zigzag, random-walk or noisy-circle");
  synth_cmd->add_option("-n,--points", input.n, "vertex count");
  synth_cmd->add_option("--seed", input.seed, "random seed");
  synth_cmd->add_option("-o,--output", output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const ps::ErrorMeasure m = ps::parse_measure(measure);

    if (app.got_subcommand(errors_cmd)) {
      const ps::Curve c = input.load();
      ps::ErrorMatrix em;
      if (method == "hull") {
        if (m != ps::ErrorMeasure::Hausdorff) {
          throw ps::InputError("--method hull supports the Hausdorff measure only");
        }
        em = ps::compute_all_errors_hull(c, threads);
      } else if (method == "naive") {
        em = ps::compute_all_errors_naive(c, m, threads);
      } else {
        throw ps::InputError("unknown method '" + method + "' (expected naive or hull)");
      }
      Output out(output);
      ps::write_error_matrix_csv(out.stream(), em);

    } else if (app.got_subcommand(graph_cmd)) {
      const ps::Curve c = input.load();
      const auto src = ps::GraphSource::make(c.points(), m, parse_strategy(strategy), threads);
      const auto g = src.build(graph_eps);
      Output out(output);
      ps::write_intervals_csv(out.stream(), g);
      if (!pgm.empty()) {
        Output raster(pgm);
        ps::write_density_pgm(raster.stream(), g);
      }
      const auto st = ps::stats(g);
      std::cerr << "shortcuts=" << st.shortcut_count << " intervals=" << st.interval_count
                << " density=" << ps::format_double(st.density) << '\n';

    } else if (app.got_subcommand(simplify_cmd)) {
      const ps::Curve c = input.load();
      const ps::Algorithm a = ps::parse_algorithm(algo);
      const auto src = ps::GraphSource::make(c.points(), m, parse_strategy(strategy), threads);
      ps::ScaleSequence scales;
      if (!eps_list.empty()) {
        scales = ps::parse_scale_list(eps_list);
      } else if (num_scales > 0) {
        if (!src.errors()) throw ps::InputError("--num-scales needs the matrix strategy");
        scales = ps::sample_scales(*src.errors(), num_scales, ps::parse_sampling(sampling));
      } else {
        throw ps::InputError("give --epsilons or --num-scales");
      }
      if (!weights_list.empty()) {
        if (a != ps::Algorithm::Optimal) throw ps::InputError("--weights applies to --algo optimal only");
        std::vector<double> w;
        for (const auto& item : split_list(weights_list)) {
          w.push_back(ps::parse_scale_list(item)[0]);
        }
        scales = ps::ScaleSequence({scales.epsilons().begin(), scales.epsilons().end()}, w);
      }
      ps::HeuristicOptions hopt;
      hopt.path.cutoff = parse_cutoff(cutoff);

      const auto start = std::chrono::steady_clock::now();
      ps::ProgressiveSimplification result;
      if (a == ps::Algorithm::Optimal) {
        auto r = ps::min_progressive_weighted(src, scales, ps::SolveOptions{threads});
        for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
        result = std::move(r.simplification);
      } else {
        result = ps::run_algorithm(a, src, scales, threads, hopt);
      }
      const auto stop = std::chrono::steady_clock::now();

      std::filesystem::create_directories(out_dir);
      Output csv((std::filesystem::path(out_dir) / "simplification.csv").string());
      ps::write_simplification_csv(csv.stream(), result);
      const auto report = ps::validate(c.points(), m, result, a == ps::Algorithm::GreedyBottomUpCao);
      json summary;
      summary["algorithm"] = algo;
      summary["measure"] = std::string(ps::to_string(m));
      summary["n"] = c.size();
      summary["epsilons"] = result.eps;
      summary["sizes"] = result.sizes();
      summary["cumulative"] = result.cumulative_size();
      summary["weighted"] = result.weighted_size(scales.weights());
      summary["valid"] = report.ok();
      summary["time_ms"] = std::chrono::duration<double, std::milli>(stop - start).count();
      Output js((std::filesystem::path(out_dir) / "summary.json").string());
      js.stream() << summary.dump(2) << '\n';
      std::cout << "cumulative=" << result.cumulative_size() << '\n';

    } else if (app.got_subcommand(cont_cmd)) {
      const ps::Curve c = input.load();
      const auto r = ps::min_progressive_continuous(c, m, ps::SolveOptions{threads});
      Output out(output);
      ps::write_continuous_csv(out.stream(), r);

    } else if (app.got_subcommand(bench_cmd)) {
      ps::BenchConfig cfg;
      if (!bench_input.empty()) cfg.input = ps::read_curve_file(bench_input).curve;
      cfg.kind = ps::parse_synth_kind(bench_kind);
      cfg.seed = bench_seed;
      cfg.sizes.clear();
      for (const auto& s : split_list(bench_sizes)) {
        try {
          cfg.sizes.push_back(std::stoul(s));
        } catch (const std::exception&) {
          throw ps::InputError("bad size '" + s + "'");
        }
      }
      cfg.num_scales = bench_scales;
      cfg.sampling = ps::parse_sampling(sampling);
      if (!bench_algos.empty()) {
        cfg.algorithms.clear();
        for (const auto& s : split_list(bench_algos)) cfg.algorithms.push_back(ps::parse_algorithm(s));
      }
      cfg.measure = m;
      cfg.threads = threads;
      cfg.heuristics.path.cutoff = parse_cutoff(cutoff);
      const auto records = ps::run_bench(cfg);
      Output out(output);
      ps::write_bench_csv(out.stream(), records, !no_time);

    } else if (app.got_subcommand(render_cmd)) {
      const ps::Curve c = input.load();
      ps::ProgressiveSimplification simp;
      if (!simp_path.empty()) {
        std::ifstream in(simp_path);
        if (!in) throw ps::InputError("cannot open '" + simp_path + "'");
        simp = ps::read_simplification_csv(in);
        const auto report = ps::check_monotone(simp, c.size());
        if (!report.ok()) throw ps::InputError("simplification does not fit the curve: " + report.problems.front());
      }
      Output out(output);
      ps::render_svg(out.stream(), c, simp);

    } else if (app.got_subcommand(synth_cmd)) {
      const ps::Curve c = ps::synth_curve(ps::parse_synth_kind(kind), input.n, input.seed);
      Output out(output);
      ps::write_curve_csv(out.stream(), c);
    }
  } catch (const ps::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
