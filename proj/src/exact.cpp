#include "dsd/exact.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "dsd/error.hpp"
#include "dsd/max_flow.hpp"

namespace dsd {

std::string_view to_string(ExactMethod method) {
  return method == ExactMethod::flow ? "flow" : "bruteforce";
}

namespace {

// Edge count of the subgraph induced by `in`, self-loops excluded.
std::int64_t loop_free_edges(const Graph& g, const std::vector<char>& in) {
  std::int64_t count = 0;
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    if (!in[v]) continue;
    for (vertex_t u : g.neighbors(v)) {
      if (u > v && in[u]) ++count;
    }
  }
  return count;
}

std::uint32_t loop_free_degree(const Graph& g, vertex_t v) {
  return g.degree(v) - (g.self_loops_retained() && g.has_self_loop(v) ? 1 : 0);
}

}  // namespace

ExactResult brute_force_densest(const Graph& graph, std::size_t cap) {
  const std::size_t n = graph.num_vertices();
  if (n == 0) throw EmptyGraphError();
  if (n > cap || n > kBruteForceHardCap) {
    throw SizeError("brute force limited to " + std::to_string(std::min(cap, kBruteForceHardCap)) +
                    " vertices, graph has " + std::to_string(n));
  }

  std::vector<std::uint32_t> adj(n, 0);
  for (vertex_t v = 0; v < n; ++v) {
    for (vertex_t u : graph.neighbors(v)) {
      if (u != v) adj[v] |= std::uint32_t{1} << u;
    }
  }

  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::uint32_t best = 1;
  std::int64_t best_edges = 0;
  std::int64_t best_size = 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::int64_t twice = 0;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      twice += std::popcount(adj[std::countr_zero(rest)] & mask);
    }
    const std::int64_t edges = twice / 2;
    const std::int64_t size = std::popcount(mask);
    const auto lhs = edges * best_size;
    const auto rhs = best_edges * size;
    bool take = lhs > rhs;
    if (lhs == rhs) {
      if (size < best_size) {
        take = true;
      } else if (size == best_size) {
        const std::uint32_t diff = mask ^ best;
        take = (mask & diff & (~diff + 1)) != 0;
      }
    }
    if (take) {
      best = mask;
      best_edges = edges;
      best_size = size;
    }
  }

  ExactResult result;
  result.method = ExactMethod::brute_force;
  result.search_iterations = full;
  for (vertex_t v = 0; v < n; ++v) {
    if (best & (std::uint32_t{1} << v)) result.members.push_back(v);
  }
  result.density = density(best_edges, best_size);
  return result;
}

ExactResult flow_exact_densest(const Graph& graph) {
  const std::size_t n = graph.num_vertices();
  if (n == 0) throw EmptyGraphError();

  ExactResult result;
  result.method = ExactMethod::flow;
  const std::int64_t m =
      graph.num_edges() - static_cast<std::int64_t>(graph.retained_self_loops());

  std::uint32_t max_degree = 0;
  for (vertex_t v = 0; v < n; ++v) max_degree = std::max(max_degree, loop_free_degree(graph, v));

  if (m == 0) {
    result.members = {0};
    result.density = density(0, 1);
    return result;
  }

  using cap_t = FlowNetwork::capacity_t;
  // Distinct subgraph densities differ by at least 1/(n(n-1)); probing on
  // that grid with capacities scaled by the same factor keeps every probe
  // in integers.
  const auto scale = static_cast<cap_t>(n) * static_cast<cap_t>(n - 1);
  const __int128 per_vertex =
      static_cast<__int128>(m) * scale + static_cast<__int128>(2) * max_degree * scale;
  if (per_vertex * static_cast<__int128>(n) >= (static_cast<__int128>(1) << 62)) {
    throw SizeError("graph too large for exact flow (scaled capacities overflow 64 bits)");
  }

  const std::size_t source = n;
  const std::size_t sink = n + 1;
  FlowNetwork net(n + 2);
  std::vector<std::size_t> sink_arcs(n);
  for (vertex_t v = 0; v < n; ++v) {
    net.add_arc(source, v, m * scale);
    sink_arcs[v] = net.add_arc(v, sink, m * scale);
    for (vertex_t u : graph.neighbors(v)) {
      if (u > v) {
        net.add_arc(v, u, scale);
        net.add_arc(u, v, scale);
      }
    }
  }

  // Probe at guess p/scale: returns the vertices on the source side of the
  // minimal min cut, non-empty iff some subgraph is denser than the guess.
  auto probe = [&](cap_t p, std::vector<char>& side) {
    for (vertex_t v = 0; v < n; ++v) {
      const cap_t c = m * scale + 2 * p - static_cast<cap_t>(loop_free_degree(graph, v)) * scale;
      if (c < 0) throw InvariantError("negative sink capacity in density network");
      net.set_capacity(sink_arcs[v], c);
    }
    net.reset();
    const auto flow = max_flow(net, source, sink);
    if (flow.value != cut_capacity(net, flow.source_side)) {
      throw InvariantError("max-flow value differs from its cut capacity");
    }
    bool any = false;
    for (vertex_t v = 0; v < n; ++v) {
      side[v] = flow.source_side[v] ? 1 : 0;
      any = any || side[v];
    }
    ++result.search_iterations;
    return any;
  };

  // Invariant: some subgraph is denser than lo/scale (best_side is one) and
  // none is denser than hi/scale.
  cap_t lo = 0;
  cap_t hi = static_cast<cap_t>(max_degree) * scale;
  std::vector<char> best_side(n, 0);
  for (vertex_t v = 0; v < n; ++v) {
    const auto adj = graph.neighbors(v);
    if (auto it = std::find_if(adj.begin(), adj.end(), [v](vertex_t u) { return u != v; });
        it != adj.end()) {
      best_side[v] = best_side[*it] = 1;
      break;
    }
  }
  std::vector<char> side(n, 0);
  while (hi - lo > 1) {
    const cap_t mid = lo + (hi - lo) / 2;
    if (probe(mid, side)) {
      const std::int64_t e = loop_free_edges(graph, side);
      std::int64_t k = 0;
      for (char c : side) k += c;
      if (static_cast<__int128>(e) * scale <= static_cast<__int128>(mid) * k) {
        throw InvariantError("min-cut certificate is not denser than the probe");
      }
      lo = mid;
      best_side.swap(side);
    } else {
      hi = mid;
    }
  }

  std::int64_t size = 0;
  for (vertex_t v = 0; v < n; ++v) {
    if (best_side[v]) {
      result.members.push_back(v);
      ++size;
    }
  }
  result.density = density(loop_free_edges(graph, best_side), size);
  return result;
}

}  // namespace dsd
