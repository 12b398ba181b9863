#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dsd {

using vertex_t = std::uint32_t;

/// Edge density |E|/|V| kept as an exact integer pair alongside its real
/// quotient. The pair is not reduced; compare with `compare_density`.
struct DensityValue {
  std::int64_t edges = 0;
  std::int64_t vertices = 1;
  double value = 0.0;

  friend bool operator==(const DensityValue&, const DensityValue&) = default;
};

/// Throws EmptySubgraphError when `vertices` is zero.
DensityValue density(std::int64_t edges, std::int64_t vertices);

/// Exact rational ordering (cross multiplication, no rounding).
std::strong_ordering compare_density(const DensityValue& a, const DensityValue& b);

inline bool same_density(const DensityValue& a, const DensityValue& b) {
  return compare_density(a, b) == std::strong_ordering::equal;
}

/// Immutable simple undirected graph in compressed sparse row form.
///
/// Vertices are dense indices [0, n) assigned in order of first appearance
/// in the input; `label` maps back to the external id. Neighbour lists are
/// sorted and duplicate free. A retained self-loop appears once in its own
/// neighbour list, so it adds 1 to the degree and 1 to `num_edges`.
class Graph {
 public:
  Graph() = default;

  /// Builds from external-id pairs. Duplicates and reversed pairs collapse.
  static Graph from_edges(std::span<const std::pair<std::uint64_t, std::uint64_t>> edges,
                          bool retain_self_loops = false);

  std::size_t num_vertices() const noexcept { return labels_.size(); }
  std::int64_t num_edges() const noexcept { return num_edges_; }

  std::span<const vertex_t> neighbors(vertex_t v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(vertex_t v) const noexcept {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  std::uint32_t max_degree() const noexcept { return max_degree_; }

  bool has_edge(vertex_t u, vertex_t v) const;
  bool has_self_loop(vertex_t v) const { return has_edge(v, v); }

  std::uint64_t label(vertex_t v) const noexcept { return labels_[v]; }
  std::optional<vertex_t> index_of(std::uint64_t label) const;

  bool self_loops_retained() const noexcept { return self_loops_retained_; }
  /// Vertices that carried a self-loop in the input, whether or not the
  /// loop was retained. Sorted.
  std::span<const vertex_t> self_loop_vertices() const noexcept { return loop_vertices_; }
  std::size_t input_self_loops() const noexcept { return loop_vertices_.size(); }
  /// Self-loops stored in the adjacency (0 unless retained).
  std::size_t retained_self_loops() const noexcept {
    return self_loops_retained_ ? loop_vertices_.size() : 0;
  }

  std::size_t raw_line_count() const noexcept { return raw_line_count_; }

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<vertex_t> targets_;
  std::vector<std::uint64_t> labels_;
  std::unordered_map<std::uint64_t, vertex_t> index_;
  std::int64_t num_edges_ = 0;
  std::uint32_t max_degree_ = 0;
  bool self_loops_retained_ = false;
  std::vector<vertex_t> loop_vertices_;
  std::size_t raw_line_count_ = 0;
};

/// Reads a SNAP-style edge list: '#' comments, blank lines ignored, two
/// non-negative integer tokens per data line. Throws ParseError (with the
/// 1-based line number) or EmptyGraphError.
Graph parse_edge_list(std::istream& in, bool retain_self_loops = false);

/// parse_edge_list on a file; IoError when it cannot be opened.
Graph load_edge_list(const std::filesystem::path& path, bool retain_self_loops = false);

/// Number of edges with both endpoints accepted by `member`.
template <std::predicate<vertex_t> Pred>
std::int64_t induced_edge_count(const Graph& g, Pred&& member) {
  std::int64_t count = 0;
  const auto n = static_cast<vertex_t>(g.num_vertices());
  for (vertex_t v = 0; v < n; ++v) {
    if (!member(v)) continue;
    for (vertex_t u : g.neighbors(v)) {
      if (u >= v && member(u)) ++count;
    }
  }
  return count;
}

std::int64_t induced_edge_count(const Graph& g, std::span<const vertex_t> members);

/// Density of the subgraph induced by `members` (duplicate free).
DensityValue induced_density(const Graph& g, std::span<const vertex_t> members);

/// Writes the deduplicated edge set (and input self-loops) back out using
/// external labels, ordered so that re-parsing assigns the same indices.
void write_edge_list(const Graph& g, std::ostream& out);

/// Same vertices, labels, adjacency and loop set; raw_line_count ignored.
bool same_structure(const Graph& a, const Graph& b);

}  // namespace dsd
