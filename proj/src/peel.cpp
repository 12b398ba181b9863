#include "dsd/peel.hpp"

#include <atomic>
#include <cmath>
#include <string>

#include "dsd/error.hpp"
#include "dsd/parallel.hpp"

namespace dsd {

double threshold(const DensityValue& rho, double epsilon) {
  return 2.0 * (1.0 + epsilon) * rho.value;
}

std::vector<vertex_t> PeelResult::members() const {
  std::vector<vertex_t> out;
  for (vertex_t v = 0; v < removal_pass.size(); ++v) {
    if (removal_pass[v] > best_pass) out.push_back(v);
  }
  return out;
}

PeelResult peel_densest(const Graph& graph, const PeelConfig& config) {
  if (!(config.epsilon >= 0.0) || !std::isfinite(config.epsilon)) {
    throw PreconditionError("epsilon must be a finite value >= 0");
  }
  if (config.workers == 0) throw PreconditionError("workers must be >= 1");
  if (graph.num_vertices() == 0 || graph.num_edges() == 0) throw EmptyGraphError();

  const std::size_t n = graph.num_vertices();
  const std::size_t workers = config.workers;

  PeelResult result;
  result.epsilon = config.epsilon;
  result.removal_pass.assign(n, kNeverRemoved);

  std::vector<std::atomic<std::uint32_t>> degree(n);
  std::vector<vertex_t> live(n);
  for (vertex_t v = 0; v < n; ++v) {
    degree[v].store(graph.degree(v), std::memory_order_relaxed);
    live[v] = v;
  }

  std::size_t remaining_vertices = n;
  std::int64_t remaining_edges = graph.num_edges();
  DensityValue rho = density(remaining_edges, static_cast<std::int64_t>(remaining_vertices));
  result.best_density = rho;
  result.best_pass = 0;
  result.pass_trace.push_back({0, remaining_vertices, remaining_edges, rho});

  // Shared between passes; written only by worker 0 between barriers.
  double limit = threshold(rho, config.epsilon);
  std::uint32_t pass = 1;
  bool done = false;
  std::string failure;

  std::vector<std::vector<vertex_t>> failed(workers);
  std::vector<std::vector<vertex_t>> survivors(workers);
  std::vector<std::int64_t> edges_removed(workers, 0);

  parallel::run_team(workers, [&](std::size_t id, std::barrier<>& sync) {
    while (true) {
      // Phase 1: mark failing vertices in this worker's slice of the live list.
      auto& my_failed = failed[id];
      auto& my_survivors = survivors[id];
      my_failed.clear();
      my_survivors.clear();
      const auto slice = parallel::chunk(live.size(), workers, id);
      for (std::size_t i = slice.begin; i < slice.end; ++i) {
        const vertex_t v = live[i];
        if (static_cast<double>(degree[v].load(std::memory_order_relaxed)) <= limit) {
          my_failed.push_back(v);
          result.removal_pass[v] = pass;
        } else {
          my_survivors.push_back(v);
        }
      }
      sync.arrive_and_wait();

      // Phase 2: detach failed vertices. An edge between two vertices failing
      // in the same pass is counted by its lower endpoint only.
      std::int64_t removed = 0;
      for (vertex_t v : my_failed) {
        for (vertex_t u : graph.neighbors(v)) {
          if (u == v) {
            ++removed;
            continue;
          }
          const std::uint32_t gone = result.removal_pass[u];
          if (gone == kNeverRemoved) {
            degree[u].fetch_sub(1, std::memory_order_relaxed);
            ++removed;
          } else if (gone == pass && v < u) {
            ++removed;
          }
        }
      }
      edges_removed[id] = removed;
      sync.arrive_and_wait();

      if (id == 0) {
        std::size_t failed_total = 0;
        std::int64_t removed_total = 0;
        for (std::size_t w = 0; w < workers; ++w) {
          failed_total += failed[w].size();
          removed_total += edges_removed[w];
        }
        result.passes_executed = pass;
        if (failed_total == 0) {
          failure = "peeling pass " + std::to_string(pass) + " removed no vertex";
          done = true;
        } else {
          remaining_vertices -= failed_total;
          remaining_edges -= removed_total;
          live.clear();
          for (const auto& part : survivors) live.insert(live.end(), part.begin(), part.end());
          if (remaining_vertices == 0) {
            done = true;
          } else {
            rho = density(remaining_edges, static_cast<std::int64_t>(remaining_vertices));
            result.pass_trace.push_back({pass, remaining_vertices, remaining_edges, rho});
            if (compare_density(rho, result.best_density) > 0) {
              result.best_density = rho;
              result.best_pass = pass;
            }
            limit = threshold(rho, config.epsilon);
            ++pass;
          }
        }
      }
      sync.arrive_and_wait();
      if (done) break;
    }
  });

  if (!failure.empty()) throw InvariantError(failure);
  if (remaining_edges != 0) throw InvariantError("edge accounting did not reach zero");
  return result;
}

}  // namespace dsd
