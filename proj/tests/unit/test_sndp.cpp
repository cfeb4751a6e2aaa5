#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "netaug/graph_core.hpp"
#include "netaug/sndp.hpp"
#include "spanner_checks.hpp"

using namespace netaug;
using namespace netaug::testing;

namespace {

std::set<ArrivalId> ids_of(const std::vector<WeightedEdge>& edges) {
  std::set<ArrivalId> out;
  for (const auto& e : edges) out.insert(e.id);
  return out;
}

bool pairwise_disjoint(const std::vector<std::vector<WeightedEdge>>& layers) {
  std::set<ArrivalId> seen;
  for (const auto& layer : layers) {
    for (const auto& e : layer) {
      if (!seen.insert(e.id).second) return false;
    }
  }
  return true;
}

bool meets_requirements(const std::vector<WeightedEdge>& edges, std::size_t n, const Requirements& r) {
  for (const auto& [pair, need] : r.pairs()) {
    if (min_st_cut(edges, n, pair.first, pair.second) < need) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("cascade routes rejected edges to the next layer") {
  Cascade c(4, 3, 2, 0.5);
  c.insert(edge(0, 1, 5, 0));
  auto layers = c.coreset();
  CHECK(layers[0] == std::vector<WeightedEdge>{edge(0, 1, 5, 0)});
  CHECK(layers[1].empty());

  c.insert(edge(1, 2, 5, 1));
  c.insert(edge(0, 2, 5, 2));
  layers = c.coreset();
  CHECK(ids_of(layers[0]) == std::set<ArrivalId>{0, 1});
  CHECK(ids_of(layers[1]) == std::set<ArrivalId>{2});
  CHECK(c.peak_stored() == 3);
  CHECK_THROWS(c.insert(edge(0, 4)));
  CHECK_THROWS(Cascade(4, 0, 2, 0.5));
}

TEST_CASE("dense clique layers are disjoint") {
  Cascade c(20, 3, 2, 0.5);
  for (const auto& e : complete_graph(20)) {
    c.insert(e);
    REQUIRE(pairwise_disjoint(c.coreset()));
  }
  CHECK(!c.coreset()[2].empty());
}

TEST_CASE("tree stream stays in the first layer and k=1 matches a plain spanner") {
  std::mt19937_64 rng(41);
  auto tree = random_connected(rng, 12, 0, 1000);
  Cascade c(12, 3, 2, 0.5);
  for (const auto& e : tree) c.insert(e);
  auto layers = c.coreset();
  CHECK(ids_of(layers[0]) == ids_of(tree));
  CHECK(layers[1].empty());
  CHECK(layers[2].empty());

  auto g = random_connected(rng, 15, 40, 1000000);
  Cascade one(15, 1, 2, 0.5);
  SpannerState plain(15, 2, spanner_epsilon(2, 0.5));
  for (const auto& e : g) {
    one.insert(e);
    plain.insert(e);
  }
  CHECK(one.coreset()[0] == plain.edges());
}

TEST_CASE("layer path property on random weighted graphs") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 5 + rng() % 36;
    const std::size_t k = 1 + rng() % 4;
    const std::size_t t = 2 + rng() % 2;
    const double eps = trial % 2 ? 0.5 : 0.1;
    auto g = random_connected(rng, n, 3 * n, 1);
    for (auto& e : g) e.w = log_uniform_weight(rng, 15);
    Cascade c(n, k, t, eps);
    for (const auto& e : g) c.insert(e);
    auto layers = c.coreset();
    REQUIRE(pairwise_disjoint(layers));
    std::set<ArrivalId> above;
    for (std::size_t i = 0; i < k; ++i) {
      for (const auto& e : layers[i]) above.insert(e.id);
      std::vector<WeightedEdge> rest;
      for (const auto& e : g) {
        if (!above.contains(e.id)) rest.push_back(e);
      }
      CHECK(stretch_violations(rest, layers[i], n, static_cast<long double>(2 * t - 1) + eps) == 0);
    }
  }
}

TEST_CASE("solve_sndp examples") {
  Requirements none(5);
  auto empty = solve_sndp(5, {{edge(0, 1, 3, 0)}}, none);
  REQUIRE(empty);
  CHECK(empty->edges.empty());
  CHECK(empty->weight == 0);

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 4 + rng() % 6;
    auto g = random_connected(rng, n, 2 * n, 50);
    Cascade c(n, 1, 2, 0.5);
    for (const auto& e : g) c.insert(e);
    auto layer = c.coreset()[0];
    Requirements r(n);
    r.set(0, static_cast<Vertex>(n - 1), 1);
    auto sol = solve_sndp(n, c.coreset(), r);
    REQUIRE(sol);
    CHECK(static_cast<unsigned __int128>(sol->weight) == dijkstra(layer, n, 0)[n - 1]);
  }

  Requirements two(4);
  for (Vertex s = 0; s < 4; ++s) {
    for (Vertex t = s + 1; t < 4; ++t) two.set(s, t, 2);
  }
  Cascade k4(4, 2, 2, 0.5);
  for (const auto& e : complete_graph(4)) k4.insert(e);
  auto sol = solve_sndp(4, k4.coreset(), two);
  REQUIRE(sol);
  CHECK(meets_requirements(sol->edges, 4, two));
  auto opt = exact_sndp(4, complete_graph(4), two);
  REQUIRE(opt);
  CHECK(opt->weight == 4);
  CHECK(sol->weight >= opt->weight);

  Requirements three(4);
  three.set(0, 1, 3);
  CHECK_THROWS_AS(solve_sndp(4, k4.coreset(), three), std::invalid_argument);
}

TEST_CASE("solve_sndp per-phase ratio and feasibility") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    const std::size_t k = 1 + rng() % 3;
    const double eps = 0.5;
    const std::size_t t = 2;
    auto g = random_connected(rng, n, rng() % (3 * n), 1);
    for (auto& e : g) e.w = log_uniform_weight(rng, 6);
    Requirements r(n);
    for (int p = 0; p < 3; ++p) {
      const Vertex s = rng() % n, u = rng() % n;
      if (s != u) r.set(s, u, 1 + rng() % k);
    }
    Cascade c(n, k, t, eps);
    for (const auto& e : g) c.insert(e);
    auto sol = solve_sndp(n, c.coreset(), r);
    const bool possible = meets_requirements(g, n, r);
    if (!sol) {
      // Some phase can be infeasible on the coreset only if the whole graph is.
      CHECK_FALSE(possible);
      continue;
    }
    CHECK(meets_requirements(sol->edges, n, r));
    for (const auto& phase : sol->phases) {
      std::set<ArrivalId> used = ids_of(phase.base);
      std::vector<WeightedEdge> all;
      for (const auto& e : g) {
        if (!used.contains(e.id)) all.push_back(e);
      }
      auto opt = solve_cut_cover(n, phase.base, all, phase_demand(r, k, phase.index));
      REQUIRE(opt);
      CHECK(static_cast<long double>(phase.weight) <=
            (static_cast<long double>(2 * t - 1) + eps) * static_cast<long double>(opt->weight) + 1e-9L);
    }
  }
}
