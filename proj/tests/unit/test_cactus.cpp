#include <doctest.h>

#include <random>
#include <sstream>

#include "cactus_checks.hpp"
#include "helpers.hpp"
#include "netaug/cactus.hpp"

using namespace netaug;
using namespace netaug::testing;

namespace {

CactusGraph figure_eight() {
  CactusGraph c;
  c.m = 5;
  c.edges = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}};
  c.phi = {0, 1, 2, 3, 4};
  return c;
}

}  // namespace

TEST_CASE("cactus validation") {
  CactusGraph c5{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}, {0, 1, 2, 3, 4}};
  CHECK(cactus_validate(c5));
  CactusGraph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, {0, 1, 2, 3}};
  CHECK_FALSE(cactus_validate(k4));
  CHECK(cactus_validate(figure_eight()));
  CactusGraph doubled{2, {{0, 1}, {0, 1}}, {0, 1}};
  CHECK(cactus_validate(doubled));
  CactusGraph bridge{2, {{0, 1}}, {0, 1}};
  CHECK_FALSE(cactus_validate(bridge));
  CactusGraph tripled{2, {{0, 1}, {0, 1}, {0, 1}}, {0, 1}};
  CHECK_FALSE(cactus_validate(tripled));
  CactusGraph loop{2, {{0, 1}, {0, 1}, {1, 1}}, {0, 1}};
  CHECK_FALSE(cactus_validate(loop));
  CactusGraph split{4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}}, {0, 1, 2, 3}};
  CHECK_FALSE(cactus_validate(split));
}

TEST_CASE("cactus of a cycle is the cycle") {
  auto c = cactus_build(cycle_graph(5), 5);
  CHECK(c.m == 5);
  CHECK(c.edges.size() == 5);
  CHECK(cactus_validate(c));
  CHECK(c.phi == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(cactus_cut_family(c) == min_cut_family(cycle_graph(5), 5));
}

TEST_CASE("cactus of a path doubles the tree edges") {
  auto path = numbered({edge(0, 1), edge(1, 2)});
  auto c = cactus_build(path, 3);
  CHECK(c.m == 3);
  CHECK(c.edges == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 1}, {1, 2}, {1, 2}});
  CHECK(cactus_validate(c));
}

TEST_CASE("cactus of K4 represents exactly the singletons") {
  auto c = cactus_build(complete_graph(4), 4);
  CHECK(cactus_validate(c));
  CHECK(c.m <= 7);
  CHECK(cactus_cut_family(c) == min_cut_family(complete_graph(4), 4));
  CHECK(min_cut_family(complete_graph(4), 4).size() == 4);
}

TEST_CASE("cactus contract on random connected graphs") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 11;
    auto g = random_connected(rng, n, rng() % (2 * n + 1), 1);
    auto c = cactus_build(g, n);
    REQUIRE(cactus_validate(c));
    REQUIRE(c.m <= 2 * n - 1);
    REQUIRE(cactus_cut_family(c) == min_cut_family(g, n));
  }
}

TEST_CASE("cactus build preconditions") {
  CHECK_THROWS_AS(cactus_build({}, 17), SizeLimitExceeded);
  CHECK_THROWS_AS(cactus_build(numbered({edge(0, 1)}), 3), std::invalid_argument);
}

TEST_CASE("unfolding") {
  CactusGraph c5{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}, {0, 1, 2, 3, 4}};
  auto u = cactus_unfold(c5);
  CHECK(u.cycle_length == 5);
  CHECK(u.zero_links.empty());
  CHECK(u.tour == std::vector<Vertex>{0, 1, 2, 3, 4});

  auto f = cactus_unfold(figure_eight());
  CHECK(f.cycle_length == 6);
  CHECK(f.tour == std::vector<Vertex>{0, 1, 2, 0, 3, 4});
  REQUIRE(f.zero_links.size() == 1);
  CHECK(f.zero_links[0].u == 0);
  CHECK(f.zero_links[0].v == 3);
  CHECK(f.zero_links[0].w == 0);
  CHECK(f.psi[0] == std::vector<Vertex>{0, 3});

  CactusGraph doubled{3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}}, {0, 1, 2}};
  auto d = cactus_unfold(doubled);
  CHECK(d.cycle_length == 4);
  CHECK(d.tour == std::vector<Vertex>{0, 1, 2, 1});
  REQUIRE(d.zero_links.size() == 1);
  CHECK(d.psi[1] == std::vector<Vertex>{1, 3});

  CHECK_THROWS_AS(cactus_unfold(CactusGraph{2, {{0, 1}}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("unfolded positions cover every vertex and edge count") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    auto g = random_connected(rng, n, rng() % (2 * n), 1);
    auto c = cactus_build(g, n);
    auto u = cactus_unfold(c);
    CHECK(u.cycle_length == c.edges.size());
    std::size_t total = 0;
    for (const auto& p : u.psi) total += p.size();
    CHECK(total == u.cycle_length);
    for (Vertex v = 0; v < n; ++v) CHECK_FALSE(u.psi[c.phi[v]].empty());
  }
}

TEST_CASE("cactus text round trip") {
  auto c = figure_eight();
  std::stringstream ss;
  write_cactus(ss, c);
  CHECK(ss.str().rfind("cactus m=5 n=5\nC 0 1\n", 0) == 0);
  auto back = read_cactus(ss);
  CHECK(back.m == c.m);
  CHECK(back.edges == c.edges);
  CHECK(back.phi == c.phi);

  std::istringstream bad("cactus m=2 n=2\nC 0 5\nP 0 0\nP 1 1\n");
  try {
    read_cactus(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
  }
  std::istringstream missing("cactus m=2 n=2\nC 0 1\nC 0 1\nP 0 0\n");
  CHECK_THROWS_AS(read_cactus(missing), ParseError);
}
