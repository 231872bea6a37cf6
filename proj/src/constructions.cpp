#include "orient/constructions.hpp"

#include <algorithm>
#include <array>

#include "orient/errors.hpp"

namespace orient {

const std::vector<Vertex>& PartLabeling::members(std::string_view name) const {
  for (const auto& [part, vs] : parts_)
    if (part == name) return vs;
  throw PreconditionError("unknown part " + std::string(name));
}

VertexSet PartLabeling::set(std::size_t n, std::initializer_list<std::string_view> names) const {
  VertexSet s(n);
  for (auto name : names)
    for (Vertex v : members(name)) s.insert(v);
  return s;
}

std::optional<std::string> PartLabeling::part_of(Vertex v) const {
  for (const auto& [part, vs] : parts_)
    if (std::find(vs.begin(), vs.end(), v) != vs.end()) return part;
  return std::nullopt;
}

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 6> kFamilyNames{{
    {Family::kPosaExtremal, "posa-extremal"},
    {Family::kT3Extremal, "t3-extremal"},
    {Family::kYusterExtremal, "yuster-extremal"},
    {Family::kCyclicBlowup, "cyclic-blowup"},
    {Family::kRegularTournament, "regular-tournament"},
    {Family::kNearRegularTournament, "near-regular-tournament"},
}};

std::vector<Vertex> range(std::size_t begin, std::size_t count) {
  std::vector<Vertex> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = static_cast<Vertex>(begin + i);
  return out;
}

void add_complete(std::vector<Edge>& edges, const std::vector<Vertex>& from,
                  const std::vector<Vertex>& to) {
  for (Vertex u : from)
    for (Vertex v : to) edges.emplace_back(u, v);
}

// Copies `pattern` onto the listed vertices (pattern vertex i -> vs[i]).
void add_copy(std::vector<Edge>& edges, const OrientedGraph& pattern, const std::vector<Vertex>& vs) {
  for (auto [u, v] : pattern.edges()) edges.emplace_back(vs[u], vs[v]);
}

// Regular on odd orders, near-regular on even orders.
OrientedGraph balanced_tournament(std::size_t q) {
  if (q == 0) return OrientedGraph(0, {});
  return q % 2 == 1 ? regular_tournament(q) : near_regular_tournament(q);
}

void check(bool ok, const std::string& what) {
  if (!ok) throw StageFailure("construction self-check failed: " + what);
}

std::size_t count_into(const OrientedGraph& g, Vertex v, const std::vector<Vertex>& part, bool outward) {
  std::size_t c = 0;
  for (Vertex w : part) c += outward ? g.has_edge(v, w) : g.has_edge(w, v);
  return c;
}

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
  for (auto [f, s] : kFamilyNames)
    if (s == name) return f;
  return std::nullopt;
}

std::string_view family_name(Family f) {
  for (auto [g, s] : kFamilyNames)
    if (g == f) return s;
  return "unknown";
}

OrientedGraph regular_tournament(std::size_t q) {
  if (q == 0 || q % 2 == 0) throw PreconditionError("regular_tournament needs an odd order, got " + std::to_string(q));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t d = 1; d <= (q - 1) / 2; ++d)
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + d) % q));
  return OrientedGraph(q, edges);
}

OrientedGraph near_regular_tournament(std::size_t q) {
  if (q < 2 || q % 2 == 1) {
    throw PreconditionError("near_regular_tournament needs an even order >= 2, got " + std::to_string(q));
  }
  std::vector<Edge> edges = regular_tournament(q - 1).edges();
  const auto top = static_cast<Vertex>(q - 1);
  for (Vertex i = 0; i < top; ++i) {
    if (i < q / 2) {
      edges.emplace_back(top, i);
    } else {
      edges.emplace_back(i, top);
    }
  }
  return OrientedGraph(q, edges);
}

Construction posa_extremal(std::size_t n) {
  if (n == 0 || n % 12 != 0) throw PreconditionError("posa_extremal needs n divisible by 12, got " + std::to_string(n));
  const std::size_t sixth = n / 6;
  const auto A = range(0, sixth + 1);
  const auto B = range(A.size(), sixth - 1);
  const auto C = range(A.size() + B.size(), n / 3);
  const auto D = range(A.size() + B.size() + C.size(), sixth);
  const auto E = range(A.size() + B.size() + C.size() + D.size(), sixth);

  std::vector<Edge> edges;
  add_complete(edges, A, C);
  add_complete(edges, B, C);
  add_complete(edges, C, D);
  add_complete(edges, C, E);
  add_complete(edges, D, A);
  add_complete(edges, D, B);
  add_complete(edges, E, A);
  add_complete(edges, E, D);
  add_copy(edges, balanced_tournament(B.size()), B);
  add_copy(edges, balanced_tournament(C.size()), C);
  add_copy(edges, balanced_tournament(D.size()), D);
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < B.size(); ++j)
      edges.push_back((i + j) % 2 == 0 ? Edge{A[i], B[j]} : Edge{B[j], A[i]});
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = 0; j < B.size(); ++j)
      edges.push_back((i + j) % 2 == 0 ? Edge{B[j], E[i]} : Edge{E[i], B[j]});

  Construction c{OrientedGraph(n, edges), {}};
  c.parts.add("A", A);
  c.parts.add("B", B);
  c.parts.add("C", C);
  c.parts.add("D", D);
  c.parts.add("E", E);

  const OrientedGraph& g = c.graph;
  const std::size_t twelfth = n / 12;
  check(degrees(g).delta_zero == 5 * twelfth - 1, "minimum semidegree is not 5n/12 - 1");
  for (Vertex a : A) {
    check(count_into(g, a, B, true) + 1 >= twelfth && count_into(g, a, B, false) + 1 >= twelfth,
          "A vertex has fewer than n/12 - 1 edges to or from B");
  }
  for (Vertex b : B) {
    check(count_into(g, b, A, true) >= twelfth && count_into(g, b, A, false) >= twelfth,
          "B vertex has fewer than n/12 edges to or from A");
    check(count_into(g, b, E, true) == twelfth && count_into(g, b, E, false) == twelfth,
          "B vertex does not send and receive exactly n/12 edges to and from E");
  }
  for (Vertex e : E) {
    check(count_into(g, e, B, true) + 1 >= twelfth && count_into(g, e, B, false) + 1 >= twelfth,
          "E vertex has fewer than n/12 - 1 edges to or from B");
  }
  const VertexSet a_set = c.parts.set(n, {"A"});
  const VertexSet e_set = c.parts.set(n, {"E"});
  const VertexSet abc = c.parts.set(n, {"A", "B", "C"});
  const VertexSet bc = c.parts.set(n, {"B", "C"});
  for (Vertex a : A) check(!g.out(a).intersects(a_set), "A is not independent");
  for (Vertex e : E) check(!g.out(e).intersects(e_set), "E is not independent");
  for (Vertex v : C) check(g.in(v).subset_of(abc), "a C vertex has an in-neighbour outside A ∪ B ∪ C");
  for (Vertex e : E) check(g.in(e).subset_of(bc), "an E vertex has an in-neighbour outside B ∪ C");
  return c;
}

Construction t3_extremal(std::size_t n) {
  if (n == 0 || n % 18 != 0) throw PreconditionError("t3_extremal needs n divisible by 18, got " + std::to_string(n));
  const std::size_t ninth2 = 2 * n / 9;
  const auto A = range(0, ninth2 + 1);
  const auto B = range(A.size(), ninth2);
  const auto C = range(A.size() + B.size(), ninth2);
  const std::size_t d_begin = A.size() + B.size() + C.size();
  const auto D = range(d_begin, n / 3 - 1);
  const auto D1 = range(d_begin, n / 6);
  const auto D2 = range(d_begin + n / 6, n / 6 - 1);

  std::vector<Edge> edges;
  add_complete(edges, A, B);
  add_complete(edges, B, C);
  add_complete(edges, C, A);
  add_copy(edges, regular_tournament(D.size()), D);
  add_complete(edges, D1, B);
  add_complete(edges, D1, C);
  add_complete(edges, A, D1);
  add_complete(edges, D2, A);
  add_complete(edges, B, D2);
  add_complete(edges, C, D2);

  Construction c{OrientedGraph(n, edges), {}};
  c.parts.add("A", A);
  c.parts.add("B", B);
  c.parts.add("C", C);
  c.parts.add("D'", D1);
  c.parts.add("D''", D2);
  check(degrees(c.graph).delta_zero == 7 * n / 18 - 1, "minimum semidegree is not 7n/18 - 1");
  return c;
}

Construction yuster_extremal(std::size_t m) {
  if (m < 1) throw PreconditionError("yuster_extremal needs m >= 1");
  const auto A = range(0, m + 1);
  const auto B = range(m + 1, m + 1);
  const auto C = range(2 * m + 2, 4 * m + 1);
  std::vector<Edge> edges;
  add_complete(edges, A, B);
  add_complete(edges, B, C);
  add_complete(edges, C, A);
  add_copy(edges, regular_tournament(C.size()), C);

  const std::size_t n = 6 * m + 3;
  Construction c{OrientedGraph(n, edges), {}};
  c.parts.add("A", A);
  c.parts.add("B", B);
  c.parts.add("C", C);
  const std::size_t delta = degrees(c.graph).delta_total;
  check(delta == 5 * m + 2 && 6 * delta == 5 * n - 3, "minimum degree is not (5n-3)/6");
  return c;
}

Construction cyclic_blowup(std::size_t n) {
  if (n == 0 || n % 3 != 0) throw PreconditionError("cyclic_blowup needs n divisible by 3, got " + std::to_string(n));
  const std::size_t third = n / 3;
  const auto A = range(0, third);
  const auto B = range(third, third);
  const auto C = range(2 * third, third);
  std::vector<Edge> edges;
  add_complete(edges, A, B);
  add_complete(edges, B, C);
  add_complete(edges, C, A);
  Construction c{OrientedGraph(n, edges), {}};
  c.parts.add("A", A);
  c.parts.add("B", B);
  c.parts.add("C", C);
  check(degrees(c.graph).delta_zero == third, "minimum semidegree is not n/3");
  return c;
}

Construction construct(Family family, std::size_t size) {
  switch (family) {
    case Family::kPosaExtremal:
      return posa_extremal(size);
    case Family::kT3Extremal:
      return t3_extremal(size);
    case Family::kYusterExtremal:
      return yuster_extremal(size);
    case Family::kCyclicBlowup:
      return cyclic_blowup(size);
    case Family::kRegularTournament: {
      Construction c{regular_tournament(size), {}};
      c.parts.add("T", range(0, size));
      return c;
    }
    case Family::kNearRegularTournament: {
      Construction c{near_regular_tournament(size), {}};
      c.parts.add("T", range(0, size));
      return c;
    }
  }
  throw PreconditionError("unknown family");
}

}  // namespace orient
