#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "netaug/spanner.hpp"
#include "spanner_checks.hpp"

using namespace netaug;
using namespace netaug::testing;

TEST_CASE("spanner construction") {
  SpannerState s(10, 2, 0.5);
  CHECK(s.stored() == 0);
  CHECK(s.edges().empty());
  CHECK_THROWS_AS(SpannerState(10, 0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(SpannerState(10, 2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(SpannerState(10, 2, 1.5), std::invalid_argument);
  // 2 n^2 / eps = 400; ceil(log_1.5 400) = 15.
  CHECK(s.bucket_width() == 15);
}

TEST_CASE("weight classes") {
  SpannerState s(4, 1, 0.5);
  CHECK(s.class_index(0) == -1);
  CHECK(s.class_index(1) == 0);
  CHECK(s.class_index(2) == 1);   // 1.5 <= 2 < 2.25
  CHECK(s.class_index(3) == 2);   // 2.25 <= 3 < 3.375
  CHECK(s.class_index(81) == 10); // 1.5^10 = 57.7, 1.5^11 = 86.5
  SpannerState one(4, 1, 1.0);
  for (int p = 0; p < 63; ++p) {
    const Weight w = Weight{1} << p;
    CHECK(one.class_index(w) == p);
    if (p > 0) CHECK(one.class_index(w - 1) == p - 1);
  }
}

TEST_CASE("line-four distance test") {
  SpannerState s(5, 2, 0.5);
  auto first = s.insert(edge(0, 1, 5, 0));
  CHECK(first.accepted);
  CHECK(first.evicted.empty());

  SpannerState u(3, 2, 0.5);
  CHECK(u.insert(edge(0, 1, 1, 0)).accepted);
  CHECK(u.insert(edge(1, 2, 1, 1)).accepted);
  auto third = u.insert(edge(0, 2, 1, 2));
  CHECK_FALSE(third.accepted);
  REQUIRE(third.evicted.size() == 1);
  CHECK(third.evicted[0].id == 2);

  // With t = 1 only direct parallels are within distance 1.
  SpannerState t1(3, 1, 0.5);
  CHECK(t1.insert(edge(0, 1, 1, 0)).accepted);
  CHECK(t1.insert(edge(1, 2, 1, 1)).accepted);
  CHECK(t1.insert(edge(0, 2, 1, 2)).accepted);
}

TEST_CASE("edge inside a lighter same-parity component is evicted") {
  // n = 3, eps = 0.5: width 9, so bucket 0 is classes 0..8 and bucket 2 starts at 1.5^18 ~ 1478.
  SpannerState s(3, 2, 0.5);
  REQUIRE(s.bucket_width() == 9);
  CHECK(s.insert(edge(0, 1, 1, 0)).accepted);
  const auto heavy = edge(0, 1, 2000, 1);
  REQUIRE(s.bucket_of_class(s.class_index(heavy.w)) == 2);
  auto r = s.insert(heavy);
  CHECK_FALSE(r.accepted);
  REQUIRE(r.evicted.size() == 1);
  CHECK(r.evicted[0] == heavy);
  CHECK(s.stored() == 1);

  // Odd bucket 1 sees no even prefix: the same pair is kept there.
  const auto odd = edge(0, 1, 100, 2);
  REQUIRE(s.bucket_of_class(s.class_index(odd.w)) == 1);
  CHECK(s.insert(odd).accepted);
}

TEST_CASE("prefix merge evicts heavier edges that became loops or parallels") {
  SpannerState s(4, 2, 0.5);  // width 11
  REQUIRE(s.bucket_width() == 11);
  // Bucket 2 (classes 22..32, from 1.5^22 ~ 7482): edges (0,2) and (1,2).
  CHECK(s.insert(edge(0, 2, 10000, 0)).accepted);
  CHECK(s.insert(edge(1, 2, 20000, 1)).accepted);
  CHECK(s.insert(edge(0, 3, 30000, 2)).accepted);
  // A light edge merges 0 and 1: (1,2) is now parallel to the lighter (0,2).
  auto r = s.insert(edge(0, 1, 1, 3));
  CHECK(r.accepted);
  REQUIRE(r.evicted.size() == 1);
  CHECK(r.evicted[0].id == 1);
  // Merging 2 and 3 next turns (0,2) and (0,3) into parallels as well.
  auto r2 = s.insert(edge(2, 3, 2, 4));
  CHECK(r2.accepted);
  REQUIRE(r2.evicted.size() == 1);
  CHECK(r2.evicted[0].id == 2);
  CHECK(s.stored() == 3);
}

TEST_CASE("parallel ties keep the earlier arrival") {
  SpannerState s(4, 1, 0.5);
  CHECK(s.insert(edge(0, 2, 10000, 0)).accepted);
  CHECK(s.insert(edge(1, 3, 10000, 1)).accepted);
  CHECK(s.insert(edge(0, 1, 1, 2)).accepted);
  auto r = s.insert(edge(2, 3, 1, 3));
  CHECK(r.accepted);
  REQUIRE(r.evicted.size() == 1);
  CHECK(r.evicted[0].id == 1);

  // A heavy edge between already-joined supernodes fails the hop test at once.
  CHECK_FALSE(s.insert(edge(1, 2, 10000, 4)).accepted);
}

TEST_CASE("zero class keeps a spanning forest") {
  SpannerState s(3, 2, 0.5);
  CHECK(s.insert(edge(0, 1, 0, 0)).accepted);
  CHECK(s.insert(edge(1, 2, 0, 1)).accepted);
  CHECK_FALSE(s.insert(edge(0, 2, 0, 2)).accepted);
  CHECK(s.zero_class().size() == 2);
  // Positive edges between zero-connected vertices are loops.
  CHECK_FALSE(s.insert(edge(0, 2, 7, 3)).accepted);
}

TEST_CASE("spanner of a tree is the tree") {
  std::mt19937_64 rng(31);
  const std::size_t n = 40;
  auto tree = random_connected(rng, n, 0, 1'000'000'000'000ULL);
  SpannerState s(n, 2, 0.5);
  for (const auto& e : tree) CHECK(s.insert(e).accepted);
  CHECK(s.edges().size() == tree.size());
}

TEST_CASE("stretch holds after every prefix") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 5 + rng() % 20;
    const std::size_t t = 1 + rng() % 3;
    const double eps = trial % 2 ? 0.5 : 0.1;
    auto edges = random_graph(rng, n, 4 * n, 1'000'000'000'000'000ULL);
    for (std::size_t i = 0; i < edges.size(); i += 7) edges[i].w = rng() % 50;  // some tiny and zero weights
    SpannerState s(n, t, eps);
    std::vector<WeightedEdge> seen;
    for (const auto& e : edges) {
      s.insert(e);
      seen.push_back(e);
      if (seen.size() % 10 == 0) {
        REQUIRE(stretch_violations(seen, s.edges(), n, (2.0L * t - 1) * (1.0L + eps)) == 0);
      }
    }
    REQUIRE(stretch_violations(seen, s.edges(), n, (2.0L * t - 1) * (1.0L + eps)) == 0);
    CHECK(s.stored() == s.edges().size());
    CHECK(s.peak_stored() >= s.stored());
  }
}

TEST_CASE("fifty-vertex graph meets the stretch bound") {
  std::mt19937_64 rng(33);
  const std::size_t n = 50;
  auto edges = random_graph(rng, n, 400, 1000);
  SpannerState s(n, 2, 0.5);
  for (const auto& e : edges) s.insert(e);
  CHECK(stretch_violations(edges, s.edges(), n, 3.0L * 1.5L) == 0);
  CHECK(s.edges().size() < edges.size());
}

TEST_CASE("gap property for edges inside lighter components") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 6 + rng() % 15;
    SpannerState s(n, 2, 0.5);
    std::vector<WeightedEdge> edges;
    for (std::size_t i = 0; i < 5 * n; ++i) {
      Vertex u = rng() % n, v = rng() % n;
      if (u == v) continue;
      edges.push_back({u, v, log_uniform_weight(rng, 18), i});
      s.insert(edges.back());
    }
    // Every stored edge whose endpoints are joined by the lighter same-parity
    // prefix is at least as heavy as that connection.
    for (const auto& [j, list] : s.classes()) {
      const auto bucket = s.bucket_of_class(j);
      std::vector<WeightedEdge> prefix(s.zero_class());
      for (const auto& [i, other] : s.classes()) {
        const auto b = s.bucket_of_class(i);
        if (b < bucket && b % 2 == bucket % 2) prefix.insert(prefix.end(), other.begin(), other.end());
      }
      for (const auto& e : list) {
        const auto d = dijkstra(prefix, n, e.u)[e.v];
        if (d != ~static_cast<unsigned __int128>(0)) CHECK(d <= e.w);
      }
    }
  }
}
