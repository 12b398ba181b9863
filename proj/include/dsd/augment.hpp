#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dsd/coredec.hpp"
#include "dsd/graph.hpp"

namespace dsd {

/// Inputs to the single-vertex density gain: a subgraph with n vertices and
/// e edges, and a candidate contributing e_tilde edges into it.
struct GainTerms {
  std::int64_t n = 1;
  std::int64_t e = 0;
  double e_tilde = 0.0;
};

/// Change in density when the candidate joins: (n*e_tilde - e) / (n(n+1)).
/// Positive exactly when e_tilde > e/n.
double density_gain(const GainTerms& terms);

struct LegitSelection {
  /// Ascending vertex indices.
  std::vector<vertex_t> legit;
  /// Sum over legit vertices of their core-neighbour counts, in half units
  /// (2 per core neighbour, 1 per retained self-loop).
  std::int64_t core_incident_halves = 0;
  /// Per-vertex half-unit counts, parallel to `legit`.
  std::vector<std::int64_t> legit_halves;
};

struct AugmentResult {
  std::size_t eligible_count = 0;
  std::vector<vertex_t> legit;
  std::int64_t core_incident_halves = 0;
  std::int64_t cross_edges = 0;
  /// core_incident_halves + 2 * cross_edges.
  std::int64_t intermediate_halves = 0;

  DensityValue core_density;
  std::uint32_t max_density_core = 0;
  std::size_t vertices = 0;       // m_v + |legit|
  std::int64_t edge_halves = 0;   // 2 * m_e + intermediate_halves
  /// edge_halves / (2 * vertices), stored with integer edges when the half
  /// count is even and as (edge_halves, 2 * vertices) otherwise.
  DensityValue final_density;

  /// Post-augmentation labelling: coreness with every legit vertex raised to
  /// max_density_core.
  std::vector<std::uint32_t> labels;

  /// Vertices with labels[v] >= max_density_core.
  std::vector<vertex_t> members() const;

  friend bool operator==(const AugmentResult&, const AugmentResult&) = default;
};

/// Vertices outside the densest core whose coreness lies strictly between the
/// core's density and its core value. Ascending.
std::vector<vertex_t> find_eligible(const Graph& graph, const CoreDecomposition& decomp,
                                    std::size_t workers = 1);

/// Keeps eligible vertices whose core-neighbour count (self-loop = 0.5)
/// strictly exceeds the densest core's density.
LegitSelection filter_legit(const Graph& graph, const CoreDecomposition& decomp,
                            std::span<const vertex_t> eligible, std::size_t workers = 1);

/// Adjacent unordered pairs within `legit` (sorted, duplicate free).
std::int64_t cross_edges(const Graph& graph, std::span<const vertex_t> legit,
                         std::size_t workers = 1);

/// One round of augmenting the densest core with its legit vertices.
AugmentResult augment(const Graph& graph, const CoreDecomposition& decomp,
                      std::size_t workers = 1);

}  // namespace dsd
