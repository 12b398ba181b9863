#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dsd/exact.hpp"
#include "dsd/graph.hpp"

namespace dsd::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kPreconditionError = 3,
  kInternalError = 4,
};

/// One algorithm run, as reported by `dsd peel|cbds|exact|bench`.
struct RunRecord {
  std::string dataset;
  std::string algorithm;
  std::optional<double> epsilon;
  std::size_t workers = 1;
  DensityValue density;
  std::size_t vertices = 0;
  /// Twice the subgraph edge count (self-loops count half in cbds).
  std::int64_t edge_halves = 0;
  std::optional<std::uint64_t> passes;
  std::optional<std::size_t> eligible;
  std::optional<std::size_t> legit;
  std::optional<std::uint32_t> max_density_core;
  double ms = 0.0;
  /// External labels, ascending; filled only on request.
  std::vector<std::uint64_t> members;
  std::string error;
};

std::string dataset_label(const std::string& path);

RunRecord run_peel(const Graph& graph, const std::string& dataset, double epsilon,
                   std::size_t workers, bool with_members);
RunRecord run_cbds(const Graph& graph, const std::string& dataset, std::size_t workers,
                   bool with_members);
RunRecord run_exact(const Graph& graph, const std::string& dataset, ExactMethod method,
                    std::size_t cap, bool with_members);

/// Fixed bench/CSV column order.
const std::string& csv_header();
std::string to_csv_row(const RunRecord& record);
/// Single-line JSON object with a fixed key order.
std::string to_json(const RunRecord& record, bool with_members);

/// Dataset summary printed by `dsd stats`.
std::string stats_json(const Graph& graph, const std::string& dataset);

/// Entry point shared by the `dsd` executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dsd::cli
