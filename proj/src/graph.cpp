#include "dsd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "dsd/error.hpp"

namespace dsd {

DensityValue density(std::int64_t edges, std::int64_t vertices) {
  if (vertices <= 0) throw EmptySubgraphError();
  return {edges, vertices, static_cast<double>(edges) / static_cast<double>(vertices)};
}

std::strong_ordering compare_density(const DensityValue& a, const DensityValue& b) {
  const auto lhs = static_cast<__int128>(a.edges) * b.vertices;
  const auto rhs = static_cast<__int128>(b.edges) * a.vertices;
  return lhs <=> rhs;
}

Graph Graph::from_edges(std::span<const std::pair<std::uint64_t, std::uint64_t>> edges,
                        bool retain_self_loops) {
  Graph g;
  g.self_loops_retained_ = retain_self_loops;

  auto intern = [&g](std::uint64_t label) {
    auto [it, inserted] = g.index_.try_emplace(label, static_cast<vertex_t>(g.labels_.size()));
    if (inserted) g.labels_.push_back(label);
    return it->second;
  };

  std::vector<std::pair<vertex_t, vertex_t>> pairs;
  pairs.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    const vertex_t u = intern(a);
    const vertex_t v = intern(b);
    if (u == v) {
      g.loop_vertices_.push_back(u);
      if (!retain_self_loops) continue;
    }
    pairs.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::sort(g.loop_vertices_.begin(), g.loop_vertices_.end());
  g.loop_vertices_.erase(std::unique(g.loop_vertices_.begin(), g.loop_vertices_.end()),
                         g.loop_vertices_.end());

  const std::size_t n = g.labels_.size();
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [u, v] : pairs) {
    ++degree[u];
    if (u != v) ++degree[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : pairs) {
    g.targets_[cursor[u]++] = v;
    if (u != v) g.targets_[cursor[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.targets_.begin() + g.offsets_[v], g.targets_.begin() + g.offsets_[v + 1]);
    g.max_degree_ = std::max(g.max_degree_, static_cast<std::uint32_t>(degree[v]));
  }
  g.num_edges_ = static_cast<std::int64_t>(pairs.size());
  g.raw_line_count_ = edges.size();
  return g;
}

bool Graph::has_edge(vertex_t u, vertex_t v) const {
  const auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<vertex_t> Graph::index_of(std::uint64_t label) const {
  if (auto it = index_.find(label); it != index_.end()) return it->second;
  return std::nullopt;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view next_token(std::string_view& rest) {
  std::size_t i = 0;
  while (i < rest.size() && is_space(rest[i])) ++i;
  std::size_t j = i;
  while (j < rest.size() && !is_space(rest[j])) ++j;
  auto token = rest.substr(i, j - i);
  rest.remove_prefix(j);
  return token;
}

std::uint64_t parse_id(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in, bool retain_self_loops) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = line;
    auto first = next_token(rest);
    if (first.empty() || first.front() == '#') continue;
    auto second = next_token(rest);
    if (second.empty()) throw ParseError(line_no, "expected two vertex ids, got one");
    if (!next_token(rest).empty()) throw ParseError(line_no, "expected two vertex ids, got more");
    edges.emplace_back(parse_id(first, line_no), parse_id(second, line_no));
  }
  if (in.bad()) throw IoError("read failure");

  Graph g = Graph::from_edges(edges, retain_self_loops);
  if (g.num_edges() == 0) throw EmptyGraphError();
  return g;
}

Graph load_edge_list(const std::filesystem::path& path, bool retain_self_loops) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return parse_edge_list(in, retain_self_loops);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path.string());
  } catch (const EmptyGraphError&) {
    throw InputError(path.string() + ": graph has no edges");
  }
}

std::int64_t induced_edge_count(const Graph& g, std::span<const vertex_t> members) {
  std::vector<char> in(g.num_vertices(), 0);
  for (vertex_t v : members) in[v] = 1;
  return induced_edge_count(g, [&in](vertex_t v) { return in[v] != 0; });
}

DensityValue induced_density(const Graph& g, std::span<const vertex_t> members) {
  return density(induced_edge_count(g, members), static_cast<std::int64_t>(members.size()));
}

void write_edge_list(const Graph& g, std::ostream& out) {
  // Each vertex must first appear after all lower indices and before all
  // higher ones. Its introducing line pairs it with a lower vertex, itself
  // (self-loop) or the next index, so emitting in index order suffices.
  const auto n = static_cast<vertex_t>(g.num_vertices());
  const auto loops = g.self_loop_vertices();
  std::vector<char> seen(n, 0);
  vertex_t skip_lower = n;  // edge (v-1, v) already emitted to introduce v-1
  for (vertex_t v = 0; v < n; ++v) {
    if (std::binary_search(loops.begin(), loops.end(), v)) {
      out << g.label(v) << ' ' << g.label(v) << '\n';
      seen[v] = 1;
    }
    for (vertex_t u : g.neighbors(v)) {
      if (u >= v) break;
      if (u == skip_lower) continue;
      out << g.label(u) << ' ' << g.label(v) << '\n';
      seen[v] = 1;
    }
    skip_lower = n;
    if (!seen[v]) {
      const auto adj = g.neighbors(v);
      // adj is non-empty for any vertex that appeared in an edge line.
      const vertex_t partner = adj.front();
      out << g.label(v) << ' ' << g.label(partner) << '\n';
      seen[v] = 1;
      if (partner == v + 1) {
        seen[partner] = 1;
        skip_lower = v;
      }
    }
  }
}

bool same_structure(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  if (a.self_loops_retained() != b.self_loops_retained()) return false;
  const auto la = a.self_loop_vertices();
  const auto lb = b.self_loop_vertices();
  if (!std::equal(la.begin(), la.end(), lb.begin(), lb.end())) return false;
  for (vertex_t v = 0; v < a.num_vertices(); ++v) {
    if (a.label(v) != b.label(v)) return false;
    const auto na = a.neighbors(v);
    const auto nb = b.neighbors(v);
    if (!std::equal(na.begin(), na.end(), nb.begin(), nb.end())) return false;
  }
  return true;
}

}  // namespace dsd
