#include "dsd/augment.hpp"

#include "dsd/parallel.hpp"

namespace dsd {

double density_gain(const GainTerms& t) {
  const auto n = static_cast<double>(t.n);
  return (n * t.e_tilde - static_cast<double>(t.e)) / (n * (n + 1.0));
}

std::vector<vertex_t> AugmentResult::members() const {
  std::vector<vertex_t> out;
  for (vertex_t v = 0; v < labels.size(); ++v) {
    if (labels[v] >= max_density_core) out.push_back(v);
  }
  return out;
}

namespace {

template <class T>
std::vector<T> concat(std::vector<std::vector<T>>& parts) {
  std::vector<T> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

std::vector<vertex_t> find_eligible(const Graph& graph, const CoreDecomposition& decomp,
                                    std::size_t workers) {
  const std::size_t n = graph.num_vertices();
  const auto m_v = static_cast<std::int64_t>(decomp.m_v);
  const std::int64_t m_e = decomp.m_e;
  std::vector<std::vector<vertex_t>> parts(std::max<std::size_t>(1, workers));
  parallel::run_team(workers, [&](std::size_t id, std::barrier<>&) {
    const auto slice = parallel::chunk(n, parts.size(), id);
    for (std::size_t v = slice.begin; v < slice.end; ++v) {
      const std::int64_t c = decomp.coreness[v];
      // c > m_e / m_v, compared exactly.
      if (c * m_v > m_e && c < static_cast<std::int64_t>(decomp.max_density_core)) {
        parts[id].push_back(static_cast<vertex_t>(v));
      }
    }
  });
  return concat(parts);
}

LegitSelection filter_legit(const Graph& graph, const CoreDecomposition& decomp,
                            std::span<const vertex_t> eligible, std::size_t workers) {
  const auto m_v = static_cast<std::int64_t>(decomp.m_v);
  const std::int64_t m_e = decomp.m_e;
  const std::size_t parts_n = std::max<std::size_t>(1, workers);
  std::vector<std::vector<vertex_t>> legit(parts_n);
  std::vector<std::vector<std::int64_t>> halves(parts_n);
  parallel::run_team(workers, [&](std::size_t id, std::barrier<>&) {
    const auto slice = parallel::chunk(eligible.size(), parts_n, id);
    for (std::size_t i = slice.begin; i < slice.end; ++i) {
      const vertex_t v = eligible[i];
      std::int64_t h = 0;
      for (vertex_t u : graph.neighbors(v)) {
        if (decomp.coreness[u] >= decomp.max_density_core) {
          h += 2;
        } else if (u == v) {
          h += 1;
        }
      }
      // h/2 > m_e/m_v
      if (h * m_v > 2 * m_e) {
        legit[id].push_back(v);
        halves[id].push_back(h);
      }
    }
  });

  LegitSelection out;
  out.legit = concat(legit);
  out.legit_halves = concat(halves);
  for (auto h : out.legit_halves) out.core_incident_halves += h;
  return out;
}

std::int64_t cross_edges(const Graph& graph, std::span<const vertex_t> legit,
                         std::size_t workers) {
  if (legit.size() < 2) return 0;
  const std::size_t parts_n = std::max<std::size_t>(1, workers);
  std::vector<std::int64_t> partial(parts_n, 0);
  parallel::run_team(workers, [&](std::size_t id, std::barrier<>&) {
    const auto slice = parallel::chunk(legit.size() - 1, parts_n, id);
    std::int64_t count = 0;
    for (std::size_t i = slice.begin; i < slice.end; ++i) {
      const vertex_t v = legit[i];
      for (std::size_t j = i + 1; j < legit.size(); ++j) {
        const vertex_t u = legit[j];
        if (u != v && graph.has_edge(v, u)) ++count;
      }
    }
    partial[id] = count;
  });
  std::int64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

AugmentResult augment(const Graph& graph, const CoreDecomposition& decomp, std::size_t workers) {
  AugmentResult out;
  out.core_density = decomp.max_density;
  out.max_density_core = decomp.max_density_core;

  const auto eligible = find_eligible(graph, decomp, workers);
  out.eligible_count = eligible.size();

  auto selection = filter_legit(graph, decomp, eligible, workers);
  out.legit = std::move(selection.legit);
  out.core_incident_halves = selection.core_incident_halves;
  out.cross_edges = cross_edges(graph, out.legit, workers);
  out.intermediate_halves = out.core_incident_halves + 2 * out.cross_edges;

  out.vertices = decomp.m_v + out.legit.size();
  out.edge_halves = 2 * decomp.m_e + out.intermediate_halves;
  const auto vertices = static_cast<std::int64_t>(out.vertices);
  if (out.edge_halves % 2 == 0) {
    out.final_density = density(out.edge_halves / 2, vertices);
  } else {
    out.final_density = density(out.edge_halves, 2 * vertices);
  }

  out.labels = decomp.coreness;
  for (vertex_t v : out.legit) out.labels[v] = decomp.max_density_core;
  return out;
}

}  // namespace dsd
