#include <doctest.h>

#include <random>

#include "dsd/error.hpp"
#include "dsd/max_flow.hpp"
#include "support/oracles.hpp"

using namespace dsd;
namespace t = dsd::testing;

TEST_CASE("single arc") {
  FlowNetwork net(2);
  net.add_arc(0, 1, 5);
  const auto r = max_flow(net, 0, 1);
  CHECK(r.value == 5);
  CHECK(r.source_side == std::vector<bool>{true, false});
}

TEST_CASE("two disjoint paths") {
  FlowNetwork net(4);
  net.add_arc(0, 1, 2);
  net.add_arc(1, 3, 2);
  net.add_arc(0, 2, 3);
  net.add_arc(2, 3, 3);
  CHECK(max_flow(net, 0, 3).value == 5);
}

TEST_CASE("bad arcs") {
  FlowNetwork net(3);
  CHECK_THROWS_AS(net.add_arc(0, 1, -1), PreconditionError);
  CHECK_THROWS_AS(net.add_arc(0, 3, 1), PreconditionError);
}

TEST_CASE("random networks match naive augmenting paths and the cut") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 2 + rng() % 11;
    std::vector<t::NaiveArc> arcs;
    FlowNetwork net(n);
    const std::size_t count = rng() % (n * n);
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t a = rng() % n;
      const std::size_t b = rng() % n;
      const auto cap = static_cast<std::int64_t>(rng() % 20);
      if (a == b) continue;
      arcs.push_back({a, b, cap});
      net.add_arc(a, b, cap);
    }
    const auto expected = t::naive_max_flow(n, arcs, 0, n - 1);
    const auto r = max_flow(net, 0, n - 1);
    CHECK(r.value == expected);
    CHECK(r.source_side[0]);
    CHECK_FALSE(r.source_side[n - 1]);
    CHECK(cut_capacity(net, r.source_side) == r.value);

    // Conservation at every inner node.
    std::vector<std::int64_t> balance(n, 0);
    for (std::size_t i = 0; i < net.num_arcs(); ++i) {
      const std::size_t id = 2 * i;
      CHECK(net.flow(id) >= 0);
      CHECK(net.flow(id) <= net.arc(id).capacity);
      balance[net.tail(id)] -= net.flow(id);
      balance[net.arc(id).to] += net.flow(id);
    }
    for (std::size_t v = 1; v + 1 < n; ++v) CHECK(balance[v] == 0);

    net.reset();
    CHECK(max_flow(net, 0, n - 1).value == expected);
  }
}
