#include "doctest.h"

#include <random>
#include <set>

#include "oracles.hpp"
#include "orient/errors.hpp"
#include "orient/graph.hpp"

using namespace orient;

TEST_CASE("vertex set basics") {
  VertexSet s(130);
  CHECK(s.empty());
  s.insert(0);
  s.insert(64);
  s.insert(129);
  CHECK(s.count() == 3);
  CHECK(s.contains(64));
  CHECK(!s.contains(63));
  CHECK(s.first() == 0);
  CHECK(s.next(1) == 64);
  CHECK(s.to_vector() == std::vector<Vertex>{0, 64, 129});
  const VertexSet f = VertexSet::full(130);
  CHECK(f.count() == 130);
  CHECK((f - s).count() == 127);
  CHECK(s.subset_of(f));
  CHECK(!f.subset_of(s));
  s.erase(64);
  CHECK(s.count() == 2);
}

TEST_CASE("graph construction rejects non-oriented input") {
  CHECK_THROWS_AS(OrientedGraph(3, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(OrientedGraph(3, {{0, 1}, {1, 0}}), PreconditionError);
  CHECK_THROWS_AS(OrientedGraph(3, {{0, 3}}), PreconditionError);
  const OrientedGraph g(3, {{0, 1}, {0, 1}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(!g.is_tournament());
  CHECK(OrientedGraph(3, {{0, 1}, {1, 2}, {2, 0}}).is_tournament());
}

TEST_CASE("degree summary") {
  const OrientedGraph g(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}});
  const auto d = degrees(g);
  CHECK(d.delta_plus == 1);
  CHECK(d.delta_minus == 0);  // vertex 3 has no in-edges
  CHECK(d.delta_zero == 0);
  CHECK(d.delta_total == 1);
  const auto e = degrees(OrientedGraph{});
  CHECK(e.delta_total == 0);
}

TEST_CASE("induced subgraph and relabel") {
  const OrientedGraph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  const auto h = induced_subgraph(g, std::vector<Vertex>{0, 2, 3});
  CHECK(h.order() == 3);
  CHECK(h.has_edge(0, 1));  // 0 -> 2
  CHECK(h.has_edge(1, 2));  // 2 -> 3
  CHECK(h.has_edge(2, 0));  // 3 -> 0
  const auto r = relabel(g, {3, 2, 1, 0});
  CHECK(r.has_edge(3, 2));
  CHECK(r.has_edge(3, 1));
  CHECK(r.edge_count() == g.edge_count());
}

TEST_CASE("digraph6 matches the reference encoder and round-trips") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 70;
    const auto g = oracle::random_graph(n, 0.3, rng);
    const std::string bytes = encode_digraph6(g);
    CHECK(bytes == oracle::digraph6(oracle::matrix_of(g)));
    CHECK(decode_digraph6(bytes) == g);
    CHECK(decode_digraph6(bytes + "\n") == g);
  }
  CHECK(encode_digraph6(OrientedGraph{}) == "&?");
}

TEST_CASE("digraph6 decoder is strict") {
  const std::string good = encode_digraph6(OrientedGraph(3, {{0, 1}, {1, 2}}));
  CHECK_THROWS_AS(decode_digraph6(""), PreconditionError);
  CHECK_THROWS_AS(decode_digraph6(good.substr(1)), PreconditionError);
  CHECK_THROWS_AS(decode_digraph6(good + "?"), PreconditionError);
  CHECK_THROWS_AS(decode_digraph6(good.substr(0, good.size() - 1)), PreconditionError);
  // 2-cycle 0 <-> 1: bits 01 10 -> "&A" then 0110 00 = 24 + 63.
  CHECK_THROWS_AS(decode_digraph6(std::string("&A") + static_cast<char>(24 + 63)), PreconditionError);
  // Loop at vertex 0.
  CHECK_THROWS_AS(decode_digraph6(std::string("&@") + static_cast<char>(32 + 63)), PreconditionError);
  // Nonzero padding bit after a single vertex.
  CHECK_THROWS_AS(decode_digraph6(std::string("&@") + static_cast<char>(1 + 63)), PreconditionError);
}

TEST_CASE("canonical form separates exactly the 56 classes of 6-tournaments") {
  std::set<std::string> forms;
  for (std::uint64_t code = 0; code < (1u << 15); ++code)
    forms.insert(canonical_form(oracle::graph_of(oracle::tournament_from_code(6, code))));
  CHECK(forms.size() == 56);
}

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 12;
    const auto g = oracle::random_graph(n, 0.25, rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto h = relabel(g, perm);
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(decode_digraph6(canonical_form(g)).edge_count() == g.edge_count());
  }
}

TEST_CASE("canonical form distinguishes non-isomorphic graphs of small order") {
  // Order 4 oriented graphs: brute-force isomorphism against canonical equality.
  std::mt19937_64 rng(17);
  std::vector<OrientedGraph> gs;
  for (int i = 0; i < 120; ++i) gs.push_back(oracle::random_graph(4, 0.4, rng));
  auto isomorphic = [](const OrientedGraph& a, const OrientedGraph& b) {
    std::vector<Vertex> p{0, 1, 2, 3};
    do {
      if (relabel(a, p) == b) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  };
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      CHECK((canonical_form(gs[i]) == canonical_form(gs[j])) == isomorphic(gs[i], gs[j]));
}

TEST_CASE("canonical form refuses large orders") {
  CHECK_THROWS_AS(canonical_form(OrientedGraph(13, {})), PreconditionError);
  CHECK_NOTHROW(canonical_form(OrientedGraph(13, {}), 13));
}
