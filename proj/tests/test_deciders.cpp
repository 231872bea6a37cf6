#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "orient/constructions.hpp"
#include "orient/deciders.hpp"
#include "orient/errors.hpp"

using namespace orient;

TEST_CASE("square_hamilton agrees with permutation search on small tournaments") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < total; ++code) {
      const auto m = oracle::tournament_from_code(n, code);
      const auto g = oracle::graph_of(m);
      for (bool reverse : {false, true}) {
        const auto r = square_hamilton(g, {std::nullopt, reverse});
        REQUIRE(r.verdict != Verdict::kTimeout);
        CHECK((r.verdict == Verdict::kYes) == oracle::square_hamiltonian(m));
        if (r.certificate) CHECK(validate_square_certificate(g, *r.certificate));
      }
    }
  }
}

TEST_CASE("square_hamilton agrees with permutation search on sparse graphs") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 5 + rng() % 4;
    const auto g = oracle::random_graph(n, 0.1, rng);
    const auto r = square_hamilton(g);
    CHECK((r.verdict == Verdict::kYes) == oracle::square_hamiltonian(oracle::matrix_of(g)));
    if (r.certificate) CHECK(validate_square_certificate(g, *r.certificate));
  }
}

TEST_CASE("certificates on larger graphs validate") {
  const auto t = regular_tournament(21);
  const auto r = square_hamilton(t);
  REQUIRE(r.verdict == Verdict::kYes);
  CHECK(validate_square_certificate(t, *r.certificate));
  CHECK(square_hamilton(posa_extremal(12).graph).verdict == Verdict::kNo);
}

TEST_CASE("square certificate validation") {
  const auto t = regular_tournament(5);
  CHECK(validate_square_certificate(t, {{0, 1, 2, 3, 4}}));
  CHECK(!validate_square_certificate(t, {{0, 2, 4, 1, 3}}));
  CHECK_THROWS_AS(validate_square_certificate(t, {{0, 1, 2, 3}}), PreconditionError);
  CHECK_THROWS_AS(validate_square_certificate(t, {{0, 1, 2, 3, 3}}), PreconditionError);
}

TEST_CASE("budgets produce a timeout, never a wrong answer") {
  const auto g = posa_extremal(24).graph;
  const auto r = square_hamilton(g, {std::chrono::duration<double>(0.05), false});
  CHECK(r.verdict == Verdict::kTimeout);
  CHECK(!r.certificate);
}

TEST_CASE("perfect packing agrees with partition enumeration") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& m : oracle::tournament_classes(n)) {
      const auto g = oracle::graph_of(m);
      for (std::size_t k = 1; k <= n; ++k) {
        const auto r = decide_perfect_t_packing(g, k);
        CHECK((r.verdict == Verdict::kYes) == oracle::perfectly_packable(m, k));
        if (r.certificate) CHECK(validate_packing(g, *r.certificate, k));
      }
    }
  }
  std::mt19937_64 rng(77);
  for (int i = 0; i < 60; ++i) {
    const auto g = oracle::random_graph(9, 0.15, rng);
    const auto m = oracle::matrix_of(g);
    for (std::size_t k : {3u}) {
      for (bool reverse : {false, true}) {
        const auto r = decide_perfect_t_packing(g, k, {std::nullopt, reverse});
        CHECK((r.verdict == Verdict::kYes) == oracle::perfectly_packable(m, k));
        if (r.certificate) CHECK(validate_packing(g, *r.certificate, k));
      }
    }
  }
}

TEST_CASE("packing validation rejects bad partitions") {
  const auto t = regular_tournament(3);
  CHECK(!perfect_t_packing(t, 3));
  const OrientedGraph tt(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(validate_packing(tt, {{{{0, 1, 2}}}}, 3));
  CHECK(!validate_packing(tt, {{{{1, 0, 2}}}}, 3));
  CHECK(!validate_packing(tt, {{{{0, 1}}}}, 2));
  CHECK(!perfect_t_packing(tt, 2));
}

TEST_CASE("extremal packings are refuted") {
  CHECK(!perfect_t_packing(t3_extremal(18).graph, 3));
  CHECK(!perfect_t_packing(t3_extremal(36).graph, 3));
  for (std::size_t m : {1u, 2u}) CHECK(!perfect_t_packing(yuster_extremal(m).graph, 3));
}

TEST_CASE("refutation does not depend on labelling") {
  std::mt19937_64 rng(8);
  const auto g = t3_extremal(36).graph;
  for (int i = 0; i < 3; ++i) {
    std::vector<Vertex> perm(36);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto r = decide_perfect_t_packing(relabel(g, perm), 3, {std::chrono::duration<double>(60.0), false});
    CHECK(r.verdict == Verdict::kNo);
  }
}
