#include "dsd/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "dsd/augment.hpp"
#include "dsd/coredec.hpp"
#include "dsd/error.hpp"
#include "dsd/parallel.hpp"
#include "dsd/peel.hpp"

namespace dsd::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<std::uint64_t> external_labels(const Graph& g, const std::vector<vertex_t>& members) {
  std::vector<std::uint64_t> out;
  out.reserve(members.size());
  for (vertex_t v : members) out.push_back(g.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_g(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

std::string format_edges(std::int64_t halves) {
  if (halves % 2 == 0) return std::to_string(halves / 2);
  return std::to_string(halves / 2) + ".5";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class T>
std::string optional_field(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string{};
}

}  // namespace

std::string dataset_label(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

RunRecord run_peel(const Graph& graph, const std::string& dataset, double epsilon,
                   std::size_t workers, bool with_members) {
  RunRecord r;
  r.dataset = dataset;
  r.algorithm = "peel";
  r.epsilon = epsilon;
  r.workers = workers;
  const auto start = Clock::now();
  const PeelResult result = peel_densest(graph, {epsilon, workers});
  r.ms = elapsed_ms(start);
  r.density = result.best_density;
  r.vertices = static_cast<std::size_t>(result.best_density.vertices);
  r.edge_halves = 2 * result.best_density.edges;
  r.passes = result.passes_executed;
  if (with_members) r.members = external_labels(graph, result.members());
  return r;
}

RunRecord run_cbds(const Graph& graph, const std::string& dataset, std::size_t workers,
                   bool with_members) {
  RunRecord r;
  r.dataset = dataset;
  r.algorithm = "cbds";
  r.workers = workers;
  const auto start = Clock::now();
  const CoreDecomposition decomp = decompose(graph, workers);
  const AugmentResult result = augment(graph, decomp, workers);
  r.ms = elapsed_ms(start);
  r.density = result.final_density;
  r.vertices = result.vertices;
  r.edge_halves = result.edge_halves;
  r.passes = decomp.levels;
  r.eligible = result.eligible_count;
  r.legit = result.legit.size();
  r.max_density_core = result.max_density_core;
  if (with_members) r.members = external_labels(graph, result.members());
  return r;
}

RunRecord run_exact(const Graph& graph, const std::string& dataset, ExactMethod method,
                    std::size_t cap, bool with_members) {
  RunRecord r;
  r.dataset = dataset;
  r.algorithm = std::string("exact-") + std::string(to_string(method));
  r.workers = 1;
  const auto start = Clock::now();
  const ExactResult result = method == ExactMethod::flow ? flow_exact_densest(graph)
                                                         : brute_force_densest(graph, cap);
  r.ms = elapsed_ms(start);
  r.density = result.density;
  r.vertices = result.members.size();
  r.edge_halves = 2 * result.density.edges;
  r.passes = result.search_iterations;
  if (with_members) r.members = external_labels(graph, result.members);
  return r;
}

const std::string& csv_header() {
  static const std::string header =
      "dataset,algorithm,epsilon,workers,density,vertices,edges,passes,eligible,legit,ms,"
      "density_num,density_den,error";
  return header;
}

std::string to_csv_row(const RunRecord& r) {
  const bool ok = r.error.empty();
  std::string row;
  row += csv_field(r.dataset) + ',';
  row += csv_field(r.algorithm) + ',';
  row += (r.epsilon ? format_g(*r.epsilon, 6) : std::string{}) + ',';
  row += std::to_string(r.workers) + ',';
  row += (ok ? format_g(r.density.value, 6) : std::string{}) + ',';
  row += (ok ? std::to_string(r.vertices) : std::string{}) + ',';
  row += (ok ? format_edges(r.edge_halves) : std::string{}) + ',';
  row += optional_field(r.passes) + ',';
  row += optional_field(r.eligible) + ',';
  row += optional_field(r.legit) + ',';
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", r.ms);
  row += std::string(ms) + ',';
  row += (ok ? std::to_string(r.density.edges) : std::string{}) + ',';
  row += (ok ? std::to_string(r.density.vertices) : std::string{}) + ',';
  row += csv_field(r.error);
  return row;
}

std::string to_json(const RunRecord& r, bool with_members) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["dataset"] = r.dataset;
  j["algorithm"] = r.algorithm;
  j["epsilon"] = r.epsilon ? ordered_json(*r.epsilon) : ordered_json(nullptr);
  j["workers"] = r.workers;
  j["density"] = r.density.value;
  j["density_num"] = r.density.edges;
  j["density_den"] = r.density.vertices;
  j["vertices"] = r.vertices;
  if (r.edge_halves % 2 == 0) {
    j["edges"] = r.edge_halves / 2;
  } else {
    j["edges"] = static_cast<double>(r.edge_halves) / 2.0;
  }
  j["passes"] = r.passes ? ordered_json(*r.passes) : ordered_json(nullptr);
  j["eligible"] = r.eligible ? ordered_json(*r.eligible) : ordered_json(nullptr);
  j["legit"] = r.legit ? ordered_json(*r.legit) : ordered_json(nullptr);
  j["max_density_core"] =
      r.max_density_core ? ordered_json(*r.max_density_core) : ordered_json(nullptr);
  j["ms"] = r.ms;
  if (with_members) j["members"] = r.members;
  return j.dump();
}

std::string stats_json(const Graph& graph, const std::string& dataset) {
  nlohmann::ordered_json j;
  j["dataset"] = dataset;
  j["num_vertices"] = graph.num_vertices();
  j["num_edges"] = graph.num_edges();
  j["raw_line_count"] = graph.raw_line_count();
  j["max_degree"] = graph.max_degree();
  j["self_loops"] = graph.input_self_loops();
  j["self_loops_retained"] = graph.self_loops_retained();
  return j.dump();
}

namespace {

struct Options {
  std::vector<std::string> inputs;
  double epsilon = 0.0;
  std::size_t threads = parallel::default_workers();
  std::string format = "json";
  bool members = false;
  bool self_loops = false;
  std::string method = "flow";
  std::size_t cap = kBruteForceCap;
  std::vector<std::string> algorithms{"peel", "cbds"};
  std::vector<std::size_t> thread_list;
  std::vector<double> epsilon_list{0.0};
  std::string csv_path;
};

void emit(const RunRecord& r, const Options& o, std::ostream& out) {
  if (o.format == "csv") {
    out << csv_header() << '\n' << to_csv_row(r) << '\n';
  } else {
    out << to_json(r, o.members) << '\n';
  }
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.inputs.empty()) {
    err << "bench: no datasets given\n";
    return kInputError;
  }
  for (const auto& a : o.algorithms) {
    if (a != "peel" && a != "cbds" && a != "exact") {
      err << "bench: unknown algorithm '" << a << "'\n";
      return kInputError;
    }
  }
  std::vector<std::size_t> threads = o.thread_list;
  if (threads.empty()) threads.push_back(parallel::default_workers());
  for (auto t : threads) {
    if (t == 0) throw PreconditionError("thread counts must be >= 1");
  }
  for (auto e : o.epsilon_list) {
    if (!(e >= 0.0)) throw PreconditionError("epsilon must be >= 0");
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.csv_path.empty()) {
    file.open(o.csv_path);
    if (!file) throw IoError("cannot write " + o.csv_path);
    sink = &file;
  }
  *sink << csv_header() << '\n';

  for (const auto& input : o.inputs) {
    const std::string label = dataset_label(input);
    std::optional<Graph> graph;
    std::string load_error;
    try {
      graph = load_edge_list(input, o.self_loops);
    } catch (const Error& e) {
      load_error = e.what();
    }
    for (const auto& algo : o.algorithms) {
      std::vector<std::optional<double>> eps;
      if (algo == "peel") {
        for (auto e : o.epsilon_list) eps.emplace_back(e);
      } else {
        eps.emplace_back(std::nullopt);
      }
      for (const auto& e : eps) {
        std::optional<RunRecord> baseline;
        for (auto t : threads) {
          RunRecord r;
          if (!load_error.empty()) {
            r.error = load_error;
          } else {
            try {
              if (algo == "peel") {
                r = run_peel(*graph, label, *e, t, false);
              } else if (algo == "cbds") {
                r = run_cbds(*graph, label, t, false);
              } else {
                r = run_exact(*graph, label, ExactMethod::flow, o.cap, false);
                r.workers = t;
              }
            } catch (const Error& ex) {
              r.error = ex.what();
            }
          }
          r.dataset = label;
          r.algorithm = algo == "exact" ? "exact-flow" : algo;
          r.epsilon = e;
          r.workers = t;
          *sink << to_csv_row(r) << '\n';
          sink->flush();
          if (!r.error.empty()) continue;
          if (baseline && (!(baseline->density == r.density) || baseline->vertices != r.vertices)) {
            err << "bench: " << label << " " << algo << " density differs between " << baseline->workers
                << " and " << t << " workers\n";
            return kInternalError;
          }
          if (!baseline) baseline = r;
        }
      }
    }
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Densest subgraph discovery: parallel peeling, core-based augmentation, exact oracles"};
  app.name("dsd");
  app.require_subcommand(1);
  Options o;

  auto add_input = [&o](CLI::App* cmd) {
    cmd->add_option("--input", o.inputs, "SNAP edge-list file")->required()->expected(1);
    cmd->add_flag("--self-loops", o.self_loops, "retain self-loops");
  };
  auto add_output = [&o](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--members", o.members, "include the member vertex list (json)");
  };

  auto* stats = app.add_subcommand("stats", "dataset summary");
  add_input(stats);

  auto* peel = app.add_subcommand("peel", "parallel greedy peeling");
  add_input(peel);
  add_output(peel);
  peel->add_option("--epsilon", o.epsilon, "peeling slack, >= 0");
  peel->add_option("--threads", o.threads, "worker count");

  auto* cbds = app.add_subcommand("cbds", "densest core plus augmentation");
  add_input(cbds);
  add_output(cbds);
  cbds->add_option("--threads", o.threads, "worker count");

  auto* exact = app.add_subcommand("exact", "exact densest subgraph");
  add_input(exact);
  add_output(exact);
  exact->add_option("--method", o.method, "flow or bruteforce")
      ->check(CLI::IsMember({"flow", "bruteforce"}));
  exact->add_option("--cap", o.cap, "vertex limit for bruteforce");

  auto* bench = app.add_subcommand("bench", "timed cross product of datasets and settings");
  bench->add_option("--input", o.inputs, "SNAP edge-list files")->delimiter(',');
  bench->add_option("--algorithm", o.algorithms, "peel, cbds, exact")->delimiter(',');
  bench->add_option("--threads", o.thread_list, "worker counts")->delimiter(',');
  bench->add_option("--epsilon", o.epsilon_list, "peeling slacks")->delimiter(',');
  bench->add_option("--csv", o.csv_path, "output CSV path (default stdout)");
  bench->add_flag("--self-loops", o.self_loops, "retain self-loops");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*bench) return cmd_bench(o, out, err);

    const std::string& input = o.inputs.front();
    const std::string label = dataset_label(input);
    const Graph graph = load_edge_list(input, o.self_loops);
    if (o.threads == 0) throw PreconditionError("--threads must be >= 1");

    if (*stats) {
      out << stats_json(graph, label) << '\n';
    } else if (*peel) {
      if (!(o.epsilon >= 0.0)) throw PreconditionError("--epsilon must be >= 0");
      emit(run_peel(graph, label, o.epsilon, o.threads, o.members), o, out);
    } else if (*cbds) {
      emit(run_cbds(graph, label, o.threads, o.members), o, out);
    } else if (*exact) {
      const auto method = o.method == "flow" ? ExactMethod::flow : ExactMethod::brute_force;
      emit(run_exact(graph, label, method, o.cap, o.members), o, out);
    }
    return kOk;
  } catch (const InputError& e) {
    err << "dsd: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "dsd: " << e.what() << '\n';
    return kPreconditionError;
  } catch (const std::exception& e) {
    err << "dsd: internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace dsd::cli
