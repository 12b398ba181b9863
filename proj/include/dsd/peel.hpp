#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "dsd/graph.hpp"

namespace dsd {

struct PeelConfig {
  double epsilon = 0.0;
  std::size_t workers = 1;
};

/// State after a peeling pass; pass 0 is the input graph.
struct PassRecord {
  std::uint32_t pass = 0;
  std::size_t vertices = 0;
  std::int64_t edges = 0;
  DensityValue density;

  friend bool operator==(const PassRecord&, const PassRecord&) = default;
};

inline constexpr std::uint32_t kNeverRemoved = std::numeric_limits<std::uint32_t>::max();

/// Result of greedy peeling. The best subgraph is not copied: it is the set
/// of vertices still alive after `best_pass`, i.e. removal_pass[v] > best_pass.
struct PeelResult {
  DensityValue best_density;
  std::uint32_t best_pass = 0;
  std::vector<std::uint32_t> removal_pass;
  std::uint32_t passes_executed = 0;
  std::vector<PassRecord> pass_trace;
  double epsilon = 0.0;

  std::vector<vertex_t> members() const;

  friend bool operator==(const PeelResult&, const PeelResult&) = default;
};

/// Removal threshold 2(1+epsilon)rho; a vertex fails when degree <= threshold.
double threshold(const DensityValue& rho, double epsilon);

/// Parallel batch peeling: each pass removes every live vertex whose degree
/// is at most threshold(rho, epsilon), where rho is the density at the start
/// of the pass, and keeps the densest intermediate subgraph. Output does not
/// depend on config.workers.
///
/// Throws PreconditionError for epsilon < 0 or workers == 0, EmptyGraphError
/// for a graph without edges.
PeelResult peel_densest(const Graph& graph, const PeelConfig& config);

}  // namespace dsd
