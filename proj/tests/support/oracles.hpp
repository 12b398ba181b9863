#pragma once

// Test-only reference implementations. Everything here is deliberately naive
// and shares no code path with the library algorithms it checks.

#include <cstdint>
#include <utility>
#include <vector>

#include "dsd/graph.hpp"

namespace dsd::testing {

using EdgeList = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

Graph make_graph(const EdgeList& edges, bool retain_self_loops = false);

Graph complete_graph(std::uint64_t k);
Graph star_graph(std::uint64_t leaves);
Graph path_graph(std::uint64_t n);

/// K6 on labels 0..5, x = 6 adjacent to 0,1,2, and a disjoint 3-regular
/// bipartite graph on labels 7..46 (left i ~ right i, i+1, i+2 mod 20).
Graph fixture_f();
inline constexpr std::uint64_t kFixtureX = 6;

/// G(n, p) on labels 0..n-1 with a seeded engine; vertices without edges do
/// not appear. Always contains at least one edge.
Graph random_graph(std::uint64_t n, double p, std::uint64_t seed);

/// Edges among `members` counted pair by pair with adjacency lookups.
std::int64_t brute_recount(const Graph& g, const std::vector<vertex_t>& members);

/// Sequential bucket-queue core decomposition (Batagelj-Zaversnik). A
/// retained self-loop counts 1 towards its vertex's degree and is never
/// peeled away, matching the library's convention.
std::vector<std::uint32_t> sequential_coreness(const Graph& g);

struct ReferencePeel {
  DensityValue best;
  std::uint32_t best_pass = 0;
  std::uint32_t passes = 0;
  std::vector<std::uint32_t> removal_pass;
};

/// Batch peeling that recomputes every degree from scratch each pass.
ReferencePeel reference_peel(const Graph& g, double epsilon);

/// Exact densest-subgraph density by subset enumeration with rationals
/// compared through cross multiplication (self-loops ignored).
DensityValue enumerate_densest(const Graph& g);

struct NaiveArc {
  std::size_t from;
  std::size_t to;
  std::int64_t capacity;
};

/// Ford-Fulkerson with DFS over a dense residual matrix.
std::int64_t naive_max_flow(std::size_t nodes, const std::vector<NaiveArc>& arcs,
                            std::size_t source, std::size_t sink);

}  // namespace dsd::testing
