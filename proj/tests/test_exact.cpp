#include <doctest.h>

#include "dsd/error.hpp"
#include "dsd/exact.hpp"
#include "support/oracles.hpp"

using namespace dsd;
namespace t = dsd::testing;

TEST_CASE("brute force small cases") {
  const auto k4 = brute_force_densest(t::complete_graph(4));
  CHECK(k4.density == density(6, 4));
  CHECK(k4.members.size() == 4);
  CHECK(k4.method == ExactMethod::brute_force);

  const auto star = brute_force_densest(t::star_graph(4));
  CHECK(star.density == density(4, 5));
  CHECK(star.members.size() == 5);

  const Graph tp = t::make_graph({{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  const auto r = brute_force_densest(tp);
  CHECK(same_density(r.density, density(1, 1)));
  CHECK(r.members == std::vector<vertex_t>{0, 1, 2});
}

TEST_CASE("brute force size limits") {
  CHECK_THROWS_AS(brute_force_densest(t::path_graph(17)), SizeError);
  CHECK_NOTHROW(brute_force_densest(t::path_graph(17), 17));
  CHECK_THROWS_AS(brute_force_densest(t::path_graph(31), 64), SizeError);
}

TEST_CASE("flow on small cases") {
  const auto k4 = flow_exact_densest(t::complete_graph(4));
  CHECK(k4.density == density(6, 4));
  CHECK(k4.members.size() == 4);
  CHECK(k4.method == ExactMethod::flow);
  CHECK(same_density(flow_exact_densest(t::star_graph(4)).density, density(4, 5)));
  CHECK(same_density(flow_exact_densest(t::path_graph(2)).density, density(1, 2)));
}

TEST_CASE("fixture F optimum is K6 plus x") {
  const Graph g = t::fixture_f();
  const auto r = flow_exact_densest(g);
  CHECK(r.density == density(18, 7));
  REQUIRE(r.members.size() == 7);
  for (vertex_t v : r.members) CHECK(g.label(v) <= t::kFixtureX);

  // The candidate neighbourhood alone, by exhaustive search.
  t::EdgeList local;
  for (std::uint64_t i = 0; i < 6; ++i)
    for (std::uint64_t j = i + 1; j < 6; ++j) local.emplace_back(i, j);
  for (std::uint64_t j = 0; j < 3; ++j) local.emplace_back(t::kFixtureX, j);
  CHECK(brute_force_densest(t::make_graph(local)).density == density(18, 7));
}

TEST_CASE("self-loops are ignored") {
  const Graph g = t::make_graph({{0, 0}, {0, 1}, {1, 1}}, true);
  CHECK(same_density(flow_exact_densest(g).density, density(1, 2)));
  CHECK(same_density(brute_force_densest(g).density, density(1, 2)));
}

TEST_CASE("flow and brute force agree with subset enumeration") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const double p = 0.1 + 0.1 * static_cast<double>(seed % 8);
    const Graph g = t::random_graph(11, p, 10'000 + seed);
    const DensityValue opt = t::enumerate_densest(g);
    const auto flow = flow_exact_densest(g);
    const auto brute = brute_force_densest(g);
    CHECK(same_density(flow.density, opt));
    CHECK(same_density(brute.density, opt));
    CHECK(induced_density(g, flow.members) == flow.density);
    CHECK(induced_density(g, brute.members) == brute.density);
  }
}

TEST_CASE("larger graphs produce a consistent certificate") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = t::random_graph(300, 0.05, 50 + seed);
    const auto r = flow_exact_densest(g);
    CHECK(induced_density(g, r.members) == r.density);
    CHECK(r.search_iterations > 0);
  }
}
