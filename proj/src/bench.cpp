#include "lightcolor/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include "lightcolor/greedy.hpp"
#include "lightcolor/rng.hpp"
#include "lightcolor/verify.hpp"

namespace lightcolor {

namespace {

template <typename F>
auto timed(double& ms, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

template <typename T>
std::string field(const std::optional<T>& value) {
  if (!value) return "";
  if constexpr (std::is_floating_point_v<T>) {
    return fixed(*value, 6);
  } else {
    return std::to_string(*value);
  }
}

void check(BenchRecord& record, const Instance& inst, const Coloring& c, const char* solver) {
  const VerifyReport report = verify_coloring(inst, c);
  if (!report.ok()) {
    const ColorClash& clash = report.violations.front();
    record.failures.push_back(std::string(solver) + " coloring invalid at (" + std::to_string(clash.arc.tail) + "," +
                              std::to_string(clash.arc.head) + ")");
  }
}

}  // namespace

SolverSet parse_solvers(std::string_view list) {
  SolverSet set{false, false, false, false};
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    const std::string_view name = list.substr(start, end - start);
    if (name == "greedy") {
      set.greedy = true;
    } else if (name == "baseline") {
      set.baseline = true;
    } else if (name == "exact") {
      set.exact = true;
    } else if (name == "bounds") {
      set.bounds = true;
    } else {
      throw InvalidInput("unknown solver \"" + std::string(name) + "\"");
    }
    start = end + 1;
  }
  return set;
}

GenParams sweep_instance_params(const SweepParams& sweep, std::size_t id) {
  if (sweep.min_vertices > sweep.max_vertices) throw InvalidInput("min_vertices exceeds max_vertices");
  if (sweep.min_subtrees > sweep.max_subtrees) throw InvalidInput("min_subtrees exceeds max_subtrees");
  GenParams p;
  p.seed = splitmix64(sweep.seed + id);
  Rng rng(p.seed ^ 0xA5A5A5A5A5A5A5A5ULL);
  p.num_vertices = static_cast<Vertex>(rng.between(sweep.min_vertices, sweep.max_vertices));
  p.num_subtrees = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(sweep.min_subtrees),
                                                        static_cast<std::int64_t>(sweep.max_subtrees)));
  if (p.num_vertices == 1) p.num_subtrees = 0;
  p.max_degree = sweep.max_degree;
  p.min_arcs = sweep.min_arcs;
  p.max_arcs = sweep.max_arcs;
  return p;
}

BenchRecord bench_instance(const Instance& inst, std::size_t id, std::uint64_t seed, const SolverSet& solvers,
                           Vertex root, std::size_t oracle_limit) {
  BenchRecord record;
  record.id = id;
  record.seed = seed;
  record.vertices = inst.tree().vertex_count;
  record.subtrees = inst.size();
  record.load = inst.load();

  const NormalizedInstance normalized = normalize(inst);
  const Instance& padded = normalized.padded;
  record.padded_subtrees = padded.size();
  const bool oracle_fits = padded.size() <= std::min(oracle_limit, kMaxOracleLimit);

  if (solvers.greedy) {
    const GreedyResult greedy = timed(record.times.greedy_ms, [&] { return greedy_color(padded, root); });
    check(record, padded, greedy.coloring, "greedy");
    const Coloring original = greedy.coloring.prefix(normalized.original_count);
    check(record, inst, original, "greedy (original subtrees)");
    record.greedy_colors_padded = greedy.coloring.colors_used();
    record.greedy_colors_original = original.colors_used();
  }
  if (solvers.baseline) {
    const Coloring baseline = timed(record.times.baseline_ms, [&] { return first_fit_baseline(inst); });
    check(record, inst, baseline, "baseline");
    record.baseline_colors = baseline.colors_used();
  }
  if (solvers.bounds) {
    record.lower_bound = timed(record.times.bounds_ms, [&] { return global_lower_bound(padded); });
    if (oracle_fits) {
      double ms = 0;
      record.max_clique = timed(ms, [&] { return max_clique(build_conflict_graph(padded), oracle_limit); });
      record.times.bounds_ms += ms;
    }
  }
  if (solvers.exact && oracle_fits) {
    const ExactColoring exact =
        timed(record.times.exact_ms, [&] { return exact_chromatic(build_conflict_graph(padded), oracle_limit); });
    check(record, padded, exact.witness, "exact witness");
    if (exact.witness.colors_used() != exact.chromatic) record.failures.push_back("exact witness color count mismatch");
    record.exact_chromatic = exact.chromatic;
  }

  if (record.greedy_colors_padded) {
    const auto greedy = static_cast<double>(*record.greedy_colors_padded);
    if (record.exact_chromatic && *record.exact_chromatic > 0) {
      record.ratio_vs_exact = greedy / static_cast<double>(*record.exact_chromatic);
      if (2 * *record.greedy_colors_padded > 5 * *record.exact_chromatic) {
        record.failures.push_back("greedy exceeds 5/2 times the chromatic number");
      }
    }
    if (record.lower_bound && *record.lower_bound > 0) {
      record.ratio_vs_lower_bound = greedy / static_cast<double>(*record.lower_bound);
    }
  }

  // load <= lower bound <= clique <= chromatic <= greedy, where computed
  std::vector<std::size_t> chain{record.load};
  for (const auto& v : {record.lower_bound, record.max_clique, record.exact_chromatic, record.greedy_colors_padded}) {
    if (v) chain.push_back(*v);
  }
  if (!std::is_sorted(chain.begin(), chain.end())) record.failures.push_back("bounds out of order");
  return record;
}

BenchResult bench_run(const SweepParams& sweep, const SolverSet& solvers, unsigned threads) {
  if (solvers.greedy && sweep.max_degree > 3) throw InvalidInput("greedy runs need max_degree <= 3");
  std::vector<GenParams> params;
  params.reserve(sweep.instances);
  for (std::size_t id = 0; id < sweep.instances; ++id) {
    params.push_back(sweep_instance_params(sweep, id));
    validate_params(params.back());
  }

  BenchResult result;
  result.records.resize(sweep.instances);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t id = next++; id < params.size(); id = next++) {
      const Instance inst = generate_instance(params[id]);
      result.records[id] = bench_instance(inst, id, params[id].seed, solvers, sweep.root, sweep.oracle_limit);
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(params.size())));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  result.summary = summarize(result.records);
  return result;
}

BenchSummary summarize(const std::vector<BenchRecord>& records) {
  BenchSummary s;
  s.instances = records.size();
  double exact_sum = 0;
  double lb_sum = 0;
  std::size_t lb_count = 0;
  for (const BenchRecord& r : records) {
    s.failures += r.failures.empty() ? 0 : 1;
    if (r.ratio_vs_exact) {
      ++s.exact_compared;
      exact_sum += *r.ratio_vs_exact;
      s.max_ratio_vs_exact = std::max(s.max_ratio_vs_exact.value_or(0.0), *r.ratio_vs_exact);
    }
    if (r.ratio_vs_lower_bound) {
      ++lb_count;
      lb_sum += *r.ratio_vs_lower_bound;
      s.max_ratio_vs_lower_bound = std::max(s.max_ratio_vs_lower_bound.value_or(0.0), *r.ratio_vs_lower_bound);
    }
  }
  if (s.exact_compared > 0) s.mean_ratio_vs_exact = exact_sum / static_cast<double>(s.exact_compared);
  if (lb_count > 0) s.mean_ratio_vs_lower_bound = lb_sum / static_cast<double>(lb_count);
  return s;
}

std::string bench_csv(const std::vector<BenchRecord>& records, bool timings) {
  std::ostringstream out;
  out << "id,seed,vertices,subtrees,padded_subtrees,load,lower_bound,max_clique,exact_chromatic,"
         "greedy_colors_padded,greedy_colors_original,baseline_colors,ratio_vs_exact,ratio_vs_lower_bound,ok";
  if (timings) out << ",greedy_ms,baseline_ms,exact_ms,bounds_ms";
  out << '\n';
  for (const BenchRecord& r : records) {
    out << r.id << ',' << r.seed << ',' << r.vertices << ',' << r.subtrees << ',' << r.padded_subtrees << ','
        << r.load << ',' << field(r.lower_bound) << ',' << field(r.max_clique) << ',' << field(r.exact_chromatic)
        << ',' << field(r.greedy_colors_padded) << ',' << field(r.greedy_colors_original) << ','
        << field(r.baseline_colors) << ',' << field(r.ratio_vs_exact) << ',' << field(r.ratio_vs_lower_bound) << ','
        << (r.failures.empty() ? 1 : 0);
    if (timings) {
      out << ',' << fixed(r.times.greedy_ms, 3) << ',' << fixed(r.times.baseline_ms, 3) << ','
          << fixed(r.times.exact_ms, 3) << ',' << fixed(r.times.bounds_ms, 3);
    }
    out << '\n';
  }
  return out.str();
}

std::string summary_text(const BenchSummary& s) {
  std::ostringstream out;
  out << "instances: " << s.instances << '\n';
  out << "compared against exact: " << s.exact_compared << '\n';
  out << "max ratio vs exact: " << field(s.max_ratio_vs_exact) << '\n';
  out << "mean ratio vs exact: " << field(s.mean_ratio_vs_exact) << '\n';
  out << "max ratio vs lower bound: " << field(s.max_ratio_vs_lower_bound) << '\n';
  out << "mean ratio vs lower bound: " << field(s.mean_ratio_vs_lower_bound) << '\n';
  out << "failed instances: " << s.failures << '\n';
  return out.str();
}

}  // namespace lightcolor
