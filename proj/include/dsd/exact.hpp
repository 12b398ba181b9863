#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "dsd/graph.hpp"

namespace dsd {

enum class ExactMethod { brute_force, flow };

std::string_view to_string(ExactMethod method);

/// Densest subgraph with an exact rational density. Self-loops are ignored.
struct ExactResult {
  DensityValue density;
  std::vector<vertex_t> members;  // ascending
  ExactMethod method = ExactMethod::flow;
  std::size_t search_iterations = 0;
};

inline constexpr std::size_t kBruteForceCap = 16;
inline constexpr std::size_t kBruteForceHardCap = 30;

/// Tries every non-empty vertex subset. Ties go to the smaller subset, then
/// to the lexicographically smallest member list. Throws SizeError when the
/// graph has more than `cap` (or kBruteForceHardCap) vertices.
ExactResult brute_force_densest(const Graph& graph, std::size_t cap = kBruteForceCap);

/// Goldberg's construction: binary search on the density guess with one
/// min-cut per probe. Guesses are multiples of 1/(n(n-1)) and capacities are
/// scaled by n(n-1), so every probe is exact integer arithmetic. Throws
/// EmptyGraphError for an empty graph and SizeError when scaled capacities
/// would overflow 64 bits.
ExactResult flow_exact_densest(const Graph& graph);

}  // namespace dsd
