// lightcolor: wavelength assignment for multicast light trees on a tree network.
//
//   lightcolor gen     --vertices N --subtrees K --seed S      > inst.json
//   lightcolor color   inst.json [--algo greedy|baseline] [--root R] [--no-normalize] [--trace]
//   lightcolor exact   inst.json
//   lightcolor bound   inst.json
//   lightcolor verify  inst.json coloring.json
//   lightcolor bench   --instances 300 --seed 1 --csv out.csv
//
// Exit codes: 0 success / valid, 1 invalid coloring or violated guarantee,
// 2 bad input.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "lightcolor/bench.hpp"
#include "lightcolor/bounds.hpp"
#include "lightcolor/generator.hpp"
#include "lightcolor/greedy.hpp"
#include "lightcolor/io.hpp"
#include "lightcolor/verify.hpp"

namespace {

using namespace lightcolor;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kBadInput = 2;

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
  } else {
    write_file(output, text);
  }
}

int report_invalid(const VerifyReport& report, const Coloring& c) {
  for (const ColorClash& clash : report.violations) {
    std::cout << "arc (" << clash.arc.tail << "," << clash.arc.head << "): subtrees " << clash.first << " and "
              << clash.second << " share color " << c[clash.first] << '\n';
  }
  return kInvalid;
}

struct GenOptions {
  GenParams params;
  std::string output;
};

struct ColorOptions {
  std::string instance;
  std::string algo = "greedy";
  Vertex root = 0;
  bool no_normalize = false;
  bool trace = false;
  std::string output;
};

struct OracleOptions {
  std::string instance;
  std::size_t limit = kDefaultOracleLimit;
  std::string output;
};

struct VerifyOptions {
  std::string instance;
  std::string coloring;
};

struct BenchOptions {
  SweepParams sweep;
  std::string solvers = "greedy,baseline,exact,bounds";
  unsigned threads = 1;
  std::string csv;
  std::string instance;
  bool timings = false;
};

int run_gen(const GenOptions& o) {
  emit(instance_to_json(generate_instance(o.params)), o.output);
  return kOk;
}

int run_color(const ColorOptions& o) {
  const Instance inst = instance_from_json(read_file(o.instance));
  ordered_json doc;
  if (o.algo == "baseline") {
    const Coloring c = first_fit_baseline(inst);
    if (VerifyReport r = verify_coloring(inst, c); !r.ok()) return report_invalid(r, c);
    doc = coloring_json(c);
  } else if (o.no_normalize) {
    const GreedyResult result = greedy_color(inst, o.root);
    if (VerifyReport r = verify_coloring(inst, result.coloring); !r.ok()) return report_invalid(r, result.coloring);
    doc = coloring_json(result.coloring);
    if (o.trace) doc["trace"] = trace_json(result.trace);
  } else {
    const NormalizedInstance normalized = normalize(inst);
    const GreedyResult result = greedy_color(normalized.padded, o.root);
    const Coloring original = result.coloring.prefix(normalized.original_count);
    if (VerifyReport r = verify_coloring(normalized.padded, result.coloring); !r.ok()) {
      return report_invalid(r, result.coloring);
    }
    doc = padded_coloring_json(result.coloring, original);
    if (o.trace) doc["trace"] = trace_json(result.trace);
  }
  emit(to_line(doc), o.output);
  return kOk;
}

int run_exact(const OracleOptions& o) {
  const Instance inst = instance_from_json(read_file(o.instance));
  const ExactColoring exact = exact_chromatic(build_conflict_graph(inst), o.limit);
  emit(to_line(coloring_json(exact.witness)), o.output);
  return kOk;
}

int run_bound(const OracleOptions& o) {
  const Instance inst = instance_from_json(read_file(o.instance));
  const BoundsReport report = compute_bounds(inst, o.limit);
  ordered_json doc;
  doc["load"] = report.load;
  doc["global_lower_bound"] = report.global_lower_bound;
  ordered_json per_edge = ordered_json::array();
  for (const auto& [edge, bound] : report.per_edge_bound) {
    ordered_json entry;
    entry["edge"] = {edge.a, edge.b};
    entry["bound"] = bound;
    per_edge.push_back(std::move(entry));
  }
  doc["per_edge"] = std::move(per_edge);
  if (report.clique_lower_bound) doc["max_clique"] = *report.clique_lower_bound;
  if (report.exact_chromatic) doc["exact_chromatic"] = *report.exact_chromatic;
  emit(to_line(doc), o.output);
  return kOk;
}

int run_verify(const VerifyOptions& o) {
  const Instance inst = instance_from_json(read_file(o.instance));
  const Coloring c = coloring_from_json(read_file(o.coloring), inst.size());
  const VerifyReport report = verify_coloring(inst, c);
  if (!report.ok()) return report_invalid(report, c);
  std::cout << "valid: " << c.colors_used() << " colors\n";
  return kOk;
}

int run_bench(const BenchOptions& o) {
  const SolverSet solvers = parse_solvers(o.solvers);
  std::vector<BenchRecord> records;
  if (!o.instance.empty()) {
    const Instance inst = instance_from_json(read_file(o.instance));
    records.push_back(bench_instance(inst, 0, 0, solvers, o.sweep.root, o.sweep.oracle_limit));
  } else {
    records = bench_run(o.sweep, solvers, o.threads).records;
  }
  const BenchSummary summary = summarize(records);
  const std::string csv = bench_csv(records, o.timings);
  if (o.csv.empty()) {
    std::cout << csv;
    std::cerr << summary_text(summary);
  } else {
    write_file(o.csv, csv);
    std::cout << summary_text(summary);
  }
  for (const BenchRecord& r : records) {
    for (const std::string& f : r.failures) std::cerr << "instance " << r.id << ": " << f << '\n';
  }
  return summary.failures == 0 ? kOk : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wavelength assignment for multicast light trees on tree networks"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--vertices", gen.params.num_vertices, "Host tree vertices")->capture_default_str();
  gen_cmd->add_option("--max-degree", gen.params.max_degree, "Maximum host tree degree")->capture_default_str();
  gen_cmd->add_option("--subtrees", gen.params.num_subtrees, "Number of light trees")->capture_default_str();
  gen_cmd->add_option("--min-arcs", gen.params.min_arcs, "Smallest light tree size in arcs")->capture_default_str();
  gen_cmd->add_option("--max-arcs", gen.params.max_arcs, "Largest light tree size in arcs")->capture_default_str();
  gen_cmd->add_option("--seed", gen.params.seed, "Generator seed")->capture_default_str();
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  ColorOptions color;
  auto* color_cmd = app.add_subcommand("color", "Color an instance");
  color_cmd->add_option("instance", color.instance, "Instance JSON")->required();
  color_cmd->add_option("--algo", color.algo, "greedy or baseline")
      ->check(CLI::IsMember({"greedy", "baseline"}))
      ->capture_default_str();
  color_cmd->add_option("--root", color.root, "BFS root for the greedy colorer")->capture_default_str();
  color_cmd->add_flag("--no-normalize", color.no_normalize, "Run greedy on the raw instance");
  color_cmd->add_flag("--trace", color.trace, "Include the per-round trace");
  color_cmd->add_option("-o,--output", color.output, "Output file (default stdout)");

  OracleOptions exact;
  auto* exact_cmd = app.add_subcommand("exact", "Optimal coloring by branch and bound");
  exact_cmd->add_option("instance", exact.instance, "Instance JSON")->required();
  exact_cmd->add_option("--limit", exact.limit, "Largest subtree count accepted")->capture_default_str();
  exact_cmd->add_option("-o,--output", exact.output, "Output file (default stdout)");

  OracleOptions bound;
  auto* bound_cmd = app.add_subcommand("bound", "Load, lower bounds and oracles");
  bound_cmd->add_option("instance", bound.instance, "Instance JSON")->required();
  bound_cmd->add_option("--limit", bound.limit, "Largest subtree count for the oracles")->capture_default_str();
  bound_cmd->add_option("-o,--output", bound.output, "Output file (default stdout)");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring against an instance");
  verify_cmd->add_option("instance", verify.instance, "Instance JSON")->required();
  verify_cmd->add_option("coloring", verify.coloring, "Coloring JSON")->required();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Certification sweep");
  bench_cmd->add_option("--instances", bench.sweep.instances, "Instances in the sweep")->capture_default_str();
  bench_cmd->add_option("--seed", bench.sweep.seed, "Sweep seed")->capture_default_str();
  bench_cmd->add_option("--min-vertices", bench.sweep.min_vertices)->capture_default_str();
  bench_cmd->add_option("--max-vertices", bench.sweep.max_vertices)->capture_default_str();
  bench_cmd->add_option("--max-degree", bench.sweep.max_degree)->capture_default_str();
  bench_cmd->add_option("--min-subtrees", bench.sweep.min_subtrees)->capture_default_str();
  bench_cmd->add_option("--max-subtrees", bench.sweep.max_subtrees)->capture_default_str();
  bench_cmd->add_option("--min-arcs", bench.sweep.min_arcs)->capture_default_str();
  bench_cmd->add_option("--max-arcs", bench.sweep.max_arcs)->capture_default_str();
  bench_cmd->add_option("--limit", bench.sweep.oracle_limit, "Oracle size guard")->capture_default_str();
  bench_cmd->add_option("--root", bench.sweep.root, "BFS root for the greedy colorer")->capture_default_str();
  bench_cmd->add_option("--solvers", bench.solvers, "Subset of greedy,baseline,exact,bounds")
      ->capture_default_str();
  bench_cmd->add_option("--threads", bench.threads, "Worker threads")->capture_default_str();
  bench_cmd->add_option("--csv", bench.csv, "CSV output path (default stdout)");
  bench_cmd->add_option("--instance", bench.instance, "Bench one instance file instead of a sweep");
  bench_cmd->add_flag("--timings", bench.timings, "Append per-solver wall times to the CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kBadInput;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*color_cmd) return run_color(color);
    if (*exact_cmd) return run_exact(exact);
    if (*bound_cmd) return run_bound(bound);
    if (*verify_cmd) return run_verify(verify);
    if (*bench_cmd) return run_bench(bench);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
