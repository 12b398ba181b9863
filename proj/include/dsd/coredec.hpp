#pragma once

#include <cstdint>
#include <vector>

#include "dsd/graph.hpp"

namespace dsd {

/// Snapshot taken after level k finished: the remainder is the (k+1)-core.
struct LevelRecord {
  std::uint32_t k = 0;
  std::size_t vertices = 0;
  std::int64_t edges = 0;
  DensityValue density;

  friend bool operator==(const LevelRecord&, const LevelRecord&) = default;
};

struct CoreDecomposition {
  std::vector<std::uint32_t> coreness;
  std::vector<LevelRecord> level_trace;
  DensityValue max_density;
  /// Core value of the densest core. Its members are exactly the vertices
  /// with coreness >= max_density_core.
  std::uint32_t max_density_core = 0;
  std::size_t m_v = 0;
  std::int64_t m_e = 0;
  std::uint32_t k_max = 0;
  /// Levels executed (k = 0 .. levels-1).
  std::uint32_t levels = 0;
  /// Atomic decrements issued, including compensated ones.
  std::uint64_t decrements = 0;

  /// Everything except `decrements`, which varies with thread interleaving.
  bool same_outcome(const CoreDecomposition& other) const;
};

/// Level-synchronous parallel k-core decomposition that also tracks the edge
/// density of every k-core and remembers the densest one. The results do not
/// depend on `workers`. Throws EmptyGraphError for a graph without edges.
CoreDecomposition decompose(const Graph& graph, std::size_t workers = 1);

/// Vertices with coreness >= max_density_core, ascending.
std::vector<vertex_t> core_members(const CoreDecomposition& decomp);

}  // namespace dsd
