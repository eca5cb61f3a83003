#pragma once

// Certification runs: generate instances, normalize, run the solvers, verify
// every coloring and check the 5/2 guarantee against the exact oracle.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lightcolor/bounds.hpp"
#include "lightcolor/generator.hpp"
#include "lightcolor/instance.hpp"

namespace lightcolor {

struct SweepParams {
  std::size_t instances = 100;
  std::uint64_t seed = 1;
  Vertex min_vertices = 2;
  Vertex max_vertices = 12;
  Vertex max_degree = 3;
  std::size_t min_subtrees = 0;
  std::size_t max_subtrees = 18;
  std::size_t min_arcs = 1;
  std::size_t max_arcs = 6;
  std::size_t oracle_limit = kDefaultOracleLimit;
  Vertex root = 0;
};

struct SolverSet {
  bool greedy = true;
  bool baseline = true;
  bool exact = true;
  bool bounds = true;
};

/// Comma-separated subset of greedy,baseline,exact,bounds.
SolverSet parse_solvers(std::string_view list);

/// Generator parameters of sweep instance `id`: its seed is
/// splitmix64(sweep.seed + id), and the vertex and subtree counts are drawn
/// from Rng(that seed) before the generator runs with the same seed.
GenParams sweep_instance_params(const SweepParams& sweep, std::size_t id);

struct SolverTimes {
  double greedy_ms = 0;
  double baseline_ms = 0;
  double exact_ms = 0;
  double bounds_ms = 0;
};

struct BenchRecord {
  std::size_t id = 0;
  std::uint64_t seed = 0;
  Vertex vertices = 0;
  std::size_t subtrees = 0;
  std::size_t padded_subtrees = 0;
  std::size_t load = 0;
  /// Bounds and oracles refer to the normalized instance.
  std::optional<std::size_t> lower_bound;
  std::optional<std::size_t> max_clique;
  std::optional<std::size_t> exact_chromatic;
  std::optional<std::size_t> greedy_colors_padded;
  std::optional<std::size_t> greedy_colors_original;
  std::optional<std::size_t> baseline_colors;
  std::optional<double> ratio_vs_exact;
  std::optional<double> ratio_vs_lower_bound;
  SolverTimes times;
  /// Failed verifications, guarantee violations and inconsistent bounds.
  std::vector<std::string> failures;
};

struct BenchSummary {
  std::size_t instances = 0;
  std::size_t exact_compared = 0;
  std::size_t failures = 0;
  std::optional<double> max_ratio_vs_exact;
  std::optional<double> mean_ratio_vs_exact;
  std::optional<double> max_ratio_vs_lower_bound;
  std::optional<double> mean_ratio_vs_lower_bound;
};

struct BenchResult {
  std::vector<BenchRecord> records;  // ascending id
  BenchSummary summary;
  bool ok() const { return summary.failures == 0; }
};

BenchRecord bench_instance(const Instance& inst, std::size_t id, std::uint64_t seed, const SolverSet& solvers,
                           Vertex root = 0, std::size_t oracle_limit = kDefaultOracleLimit);

/// Runs the sweep on `threads` workers; output does not depend on scheduling.
BenchResult bench_run(const SweepParams& sweep, const SolverSet& solvers, unsigned threads = 1);

BenchSummary summarize(const std::vector<BenchRecord>& records);

/// Timing columns are appended only when `timings` is set, since they are not
/// reproducible.
std::string bench_csv(const std::vector<BenchRecord>& records, bool timings = false);
std::string summary_text(const BenchSummary& summary);

}  // namespace lightcolor
