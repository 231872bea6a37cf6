#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "orient/errors.hpp"
#include "orient/packing.hpp"
#include "orient/ramsey.hpp"

using namespace orient;

namespace {

RamseyTable small_table() {
  RamseyTable t;
  t.set_oriented(2, {2, Provenance::kComputed, false});
  t.set_oriented(3, {4, Provenance::kComputed, false});
  t.set_oriented(5, {14, Provenance::kLiterature, false});
  t.set_tiling(3, {6, Provenance::kComputed, false});
  return t;
}

// Random tournament with one random matching removed: minimum total
// degree at least n - 2.
OrientedGraph dense_graph(std::size_t n, std::mt19937_64& rng) {
  const auto t = oracle::random_tournament(n, rng);
  auto edges = t.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<bool> touched(n, false);
  std::vector<Edge> kept;
  for (auto [u, v] : edges) {
    if (!touched[u] && !touched[v] && (rng() & 1)) {
      touched[u] = touched[v] = true;
      continue;
    }
    kept.emplace_back(u, v);
  }
  return OrientedGraph(n, kept);
}

}  // namespace

TEST_CASE("patch_leftover handles every attachment of x to a transitive 5-set") {
  for (unsigned pattern = 0; pattern < 32; ++pattern) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i)
      for (Vertex j = i + 1; j < 5; ++j) edges.emplace_back(i, j);
    for (Vertex i = 0; i < 5; ++i) {
      if ((pattern >> i) & 1) edges.emplace_back(5, i);
      else edges.emplace_back(i, 5);
    }
    const OrientedGraph g(6, edges);
    const auto [a, b] = patch_leftover({{0, 1, 2, 3, 4}}, 5, g, 3);
    CHECK(is_transitive_witness(g, a));
    CHECK(is_transitive_witness(g, b));
    CHECK(a.size() == 3);
    CHECK(b.size() == 3);
    VertexSet cover(6);
    for (Vertex v : a.order) cover.insert(v);
    for (Vertex v : b.order) cover.insert(v);
    CHECK(cover.count() == 6);
  }
}

TEST_CASE("patch_leftover preconditions") {
  const OrientedGraph g(4, {{0, 1}, {0, 2}, {1, 2}});
  CHECK_THROWS_AS(patch_leftover({{0, 1, 2}}, 3, g, 2), PreconditionError);
  CHECK_THROWS_AS(patch_leftover({{0, 1, 2}}, 1, g, 2), PreconditionError);
}

TEST_CASE("caro_pack on random tournaments") {
  const auto table = small_table();
  CHECK(caro_min_order(3, table) == 24);
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 30; ++i) {
    const auto t = oracle::random_tournament(33, rng);
    CaroTrace trace;
    const auto p = caro_pack(t, 3, table, &trace);
    CHECK(validate_packing(t, p, 3));
    CHECK(p.blocks.size() == 11);
    CHECK(trace.reserved_copies == 3);
    CHECK(trace.reserved_vertices == 15);
    CHECK(trace.uncovered_after_fill == 3);
    CHECK(!trace.direct_pairing);
  }
}

TEST_CASE("caro_pack with k = 2") {
  const auto table = small_table();
  std::mt19937_64 rng(4);
  for (std::size_t n : {2u, 4u, 6u, 10u, 20u}) {
    const auto t = oracle::random_tournament(n, rng);
    CaroTrace trace;
    const auto p = caro_pack(t, 2, table, &trace);
    CHECK(validate_packing(t, p, 2));
    CHECK(trace.direct_pairing == (n < caro_min_order(2, table)));
  }
}

TEST_CASE("caro_pack preconditions") {
  const auto table = small_table();
  std::mt19937_64 rng(4);
  CHECK_THROWS_AS(caro_pack(oracle::random_tournament(21, rng), 3, table), PreconditionError);
  CHECK_THROWS_AS(caro_pack(oracle::random_tournament(25, rng), 3, table), PreconditionError);
  CHECK_THROWS_AS(caro_pack(oracle::random_graph(30, 0.1, rng), 3, table), PreconditionError);
  CHECK_THROWS_AS(caro_pack(oracle::random_tournament(40, rng), 4, table), PreconditionError);
}

TEST_CASE("hs_pack on dense graphs") {
  const auto table = small_table();
  std::mt19937_64 rng(55);
  for (int i = 0; i < 30; ++i) {
    const auto g = dense_graph(12, rng);
    REQUIRE(degrees(g).delta_total >= 10);
    HsTrace trace;
    const auto p = hs_pack(g, 3, table, &trace);
    CHECK(validate_packing(g, p, 3));
    CHECK(trace.adjustment_blocks == 0);
    CHECK(trace.residual_order == 12);
    CHECK(trace.clique_blocks == 2);
  }
  // Orders not divisible by TR(3) are trimmed first.
  const auto g = dense_graph(15, rng);
  if (degrees(g).delta_total * 6 >= 15 * 5) {
    HsTrace trace;
    CHECK(validate_packing(g, hs_pack(g, 3, table, &trace), 3));
    CHECK(trace.adjustment_blocks == 1);
  }
}

TEST_CASE("hs_pack preconditions") {
  const auto table = small_table();
  CHECK_THROWS_AS(hs_pack(OrientedGraph(12, {}), 3, table), PreconditionError);
  CHECK_THROWS_AS(hs_pack(OrientedGraph(10, {}), 3, table), PreconditionError);
  CHECK_THROWS_AS(hs_pack(OrientedGraph(8, {}), 4, table), PreconditionError);
}

TEST_CASE("ramsey table json and validation") {
  const auto t = small_table();
  const auto back = RamseyTable::from_json(t.to_json());
  CHECK(back.oriented_entries() == t.oriented_entries());
  CHECK(back.tiling_entries() == t.tiling_entries());
  const auto fallback = t.oriented(9);
  REQUIRE(fallback);
  CHECK(fallback->value == 216);
  CHECK(fallback->upper_bound);
  CHECK(fallback->provenance == Provenance::kLiterature);
  CHECK(!t.oriented(4));

  RamseyTable bad;
  bad.set_oriented(3, {4, Provenance::kComputed, false});
  bad.set_oriented(4, {3, Provenance::kComputed, false});
  CHECK_THROWS_AS(bad.validate(), PreconditionError);
  CHECK_THROWS_AS(RamseyTable::from_json(nlohmann::json::parse(R"({"oriented":{"3":{"value":4,"provenance":"guess"}}})")),
                  PreconditionError);

  RamseyTable merged = t;
  RamseyTable other;
  other.set_oriented(3, {5, Provenance::kLiterature, false});
  merged.merge(other);
  CHECK(merged.oriented(3)->value == 5);
  CHECK(merged.oriented(5)->value == 14);
}
