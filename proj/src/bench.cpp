#include "progsimp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include "progsimp/graph_source.hpp"
#include "progsimp/io.hpp"
#include "progsimp/validate.hpp"

namespace progsimp {

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  if (cfg.sizes.empty()) throw InputError("no curve sizes configured");
  const std::size_t longest = *std::max_element(cfg.sizes.begin(), cfg.sizes.end());
  const Curve base = cfg.input ? *cfg.input : synth_curve(cfg.kind, longest, cfg.seed);
  std::vector<BenchRecord> records;
  for (std::size_t n : cfg.sizes) {
    if (n < 2 || n > base.size()) {
      throw InputError("prefix length " + std::to_string(n) + " is outside 2.." +
                       std::to_string(base.size()));
    }
    const auto pts = base.points().first(n);
    const auto src = GraphSource::make(pts, cfg.measure, GraphStrategy::ErrorMatrix, cfg.threads);
    const ScaleSequence scales = sample_scales(*src.errors(), cfg.num_scales, cfg.sampling);
    std::size_t shortcuts = 0;
    std::size_t intervals = 0;
    for (double eps : scales.epsilons()) {
      const auto st = stats(src.build(eps));
      shortcuts += st.shortcut_count;
      intervals += st.interval_count;
    }
    for (Algorithm a : cfg.algorithms) {
      BenchRecord r;
      r.algorithm = std::string(to_string(a));
      r.n = n;
      r.m = scales.size();
      r.shortcut_count = shortcuts;
      r.interval_count = intervals;
      try {
        const auto start = std::chrono::steady_clock::now();
        const auto ps = run_algorithm(a, src, scales, cfg.threads, cfg.heuristics);
        const auto stop = std::chrono::steady_clock::now();
        r.time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        r.sizes = ps.sizes();
        r.cumulative = ps.cumulative_size();
        r.valid = validate(pts, cfg.measure, ps, a == Algorithm::GreedyBottomUpCao).ok();
      } catch (const std::exception& e) {
        r.error = e.what();
      }
      records.push_back(std::move(r));
    }
  }
  return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records, bool include_time) {
  out << "algorithm,n,m,cumulative,sizes,shortcut_count,interval_count,valid,error";
  if (include_time) out << ",time_ms";
  out << '\n';
  for (const BenchRecord& r : records) {
    out << r.algorithm << ',' << r.n << ',' << r.m << ',' << r.cumulative << ',';
    for (std::size_t k = 0; k < r.sizes.size(); ++k) out << (k ? ";" : "") << r.sizes[k];
    std::string err = r.error;
    std::replace(err.begin(), err.end(), ',', ';');
    out << ',' << r.shortcut_count << ',' << r.interval_count << ',' << (r.valid ? 1 : 0) << ','
        << err;
    if (include_time) out << ',' << format_double(r.time_ms);
    out << '\n';
  }
}

}  // namespace progsimp
