#include "dsd/coredec.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#include "dsd/error.hpp"
#include "dsd/parallel.hpp"

namespace dsd {

bool CoreDecomposition::same_outcome(const CoreDecomposition& other) const {
  return coreness == other.coreness && level_trace == other.level_trace &&
         max_density == other.max_density && max_density_core == other.max_density_core &&
         m_v == other.m_v && m_e == other.m_e && k_max == other.k_max && levels == other.levels;
}

CoreDecomposition decompose(const Graph& graph, std::size_t workers) {
  if (workers == 0) throw PreconditionError("workers must be >= 1");
  if (graph.num_vertices() == 0 || graph.num_edges() == 0) throw EmptyGraphError();

  const std::size_t n = graph.num_vertices();
  const std::int64_t m = graph.num_edges();

  std::vector<std::atomic<std::uint32_t>> degree(n);
  for (vertex_t v = 0; v < n; ++v) degree[v].store(graph.degree(v), std::memory_order_relaxed);

  std::atomic<std::size_t> visited{0};
  // Every removed edge is eventually counted twice across deleted + aux
  // (+ loops, since a self-loop is seen from one endpoint only).
  std::atomic<std::int64_t> deleted{0};
  std::atomic<std::int64_t> aux{0};
  std::atomic<std::int64_t> loops{0};
  std::atomic<std::uint64_t> decrements{0};

  CoreDecomposition out;
  out.max_density = DensityValue{0, 1, 0.0};

  std::uint32_t level = 0;
  std::string failure;

  parallel::run_team(workers, [&](std::size_t id, std::barrier<>& sync) {
    std::vector<vertex_t> buff;
    const auto slice = parallel::chunk(n, workers, id);
    while (visited.load(std::memory_order_relaxed) < n && failure.empty()) {
      const std::uint32_t k = level;
      buff.clear();
      for (std::size_t v = slice.begin; v < slice.end; ++v) {
        if (degree[v].load(std::memory_order_relaxed) == k) buff.push_back(static_cast<vertex_t>(v));
      }
      sync.arrive_and_wait();

      std::int64_t deleted_local = 0;
      std::int64_t aux_local = 0;
      std::int64_t loops_local = 0;
      std::uint64_t decrements_local = 0;
      for (std::size_t start = 0; start < buff.size(); ++start) {
        const vertex_t v = buff[start];
        deleted_local += k;
        for (vertex_t u : graph.neighbors(v)) {
          if (u == v) {
            ++loops_local;
            continue;
          }
          if (degree[u].load(std::memory_order_relaxed) <= k) continue;
          const std::uint32_t before = degree[u].fetch_sub(1, std::memory_order_relaxed);
          ++decrements_local;
          if (before == k + 1) buff.push_back(u);
          if (before <= k) degree[u].fetch_add(1, std::memory_order_relaxed);
          if (before > k) {
            ++aux_local;
          } else {
            ++deleted_local;
            --aux_local;
          }
        }
      }
      visited.fetch_add(buff.size(), std::memory_order_relaxed);
      deleted.fetch_add(deleted_local, std::memory_order_relaxed);
      aux.fetch_add(aux_local, std::memory_order_relaxed);
      loops.fetch_add(loops_local, std::memory_order_relaxed);
      decrements.fetch_add(decrements_local, std::memory_order_relaxed);
      sync.arrive_and_wait();

      if (id == 0) {
        const std::int64_t counted = deleted.load() + aux.load() + loops.load();
        const std::size_t done = visited.load();
        if (counted % 2 != 0) {
          failure = "odd removed-edge tally at level " + std::to_string(k);
        } else if (done < n) {
          const std::int64_t edges = m - counted / 2;
          const std::size_t vertices = n - done;
          const DensityValue d = density(edges, static_cast<std::int64_t>(vertices));
          out.level_trace.push_back({k, vertices, edges, d});
          if (compare_density(d, out.max_density) > 0) {
            out.max_density = d;
            out.m_e = edges;
            out.m_v = vertices;
            // The remainder after level k is the (k+1)-core.
            out.max_density_core = k + 1;
          }
        } else if (counted / 2 != m) {
          failure = "removed-edge tally does not match edge count";
        }
        out.levels = k + 1;
        level = k + 1;
      }
      sync.arrive_and_wait();
    }
  });

  if (!failure.empty()) throw InvariantError(failure);

  out.coreness.resize(n);
  for (vertex_t v = 0; v < n; ++v) out.coreness[v] = degree[v].load(std::memory_order_relaxed);
  out.k_max = *std::max_element(out.coreness.begin(), out.coreness.end());
  out.decrements = decrements.load();
  return out;
}

std::vector<vertex_t> core_members(const CoreDecomposition& decomp) {
  std::vector<vertex_t> out;
  for (vertex_t v = 0; v < decomp.coreness.size(); ++v) {
    if (decomp.coreness[v] >= decomp.max_density_core) out.push_back(v);
  }
  return out;
}

}  // namespace dsd
