#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orient/graph.hpp"

namespace orient {

/// Named parts of a construction, in construction order. The parts
/// partition the vertex set.
class PartLabeling {
 public:
  void add(std::string name, std::vector<Vertex> members) {
    parts_.emplace_back(std::move(name), std::move(members));
  }

  const std::vector<std::pair<std::string, std::vector<Vertex>>>& parts() const { return parts_; }

  /// Members of the named part. Throws PreconditionError for unknown names.
  const std::vector<Vertex>& members(std::string_view name) const;

  /// Union of the named parts as a set over `n` vertices.
  VertexSet set(std::size_t n, std::initializer_list<std::string_view> names) const;

  std::optional<std::string> part_of(Vertex v) const;

 private:
  std::vector<std::pair<std::string, std::vector<Vertex>>> parts_;
};

struct Construction {
  OrientedGraph graph;
  PartLabeling parts;
};

enum class Family {
  kPosaExtremal,
  kT3Extremal,
  kYusterExtremal,
  kCyclicBlowup,
  kRegularTournament,
  kNearRegularTournament,
};

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family f);

/// Circulant tournament: i -> j iff (j - i) mod q lies in 1..(q-1)/2.
OrientedGraph regular_tournament(std::size_t q);

/// regular_tournament(q - 1) plus vertex q-1 beating 0..q/2-1 and beaten by
/// the rest. Minimum semidegree q/2 - 1.
OrientedGraph near_regular_tournament(std::size_t q);

/// Parts A,B,C,D,E of sizes n/6+1, n/6-1, n/3, n/6, n/6 with minimum
/// semidegree 5n/12 - 1 and no square of a Hamilton cycle. Requires 12 | n.
///
/// The A-B and B-E classes are oriented by index parity: a_i -> b_j iff i+j
/// is even, b_j -> e_i iff i+j is even. The generator re-checks every
/// degree claim and throws StageFailure if one fails.
Construction posa_extremal(std::size_t n);

/// Parts A,B,C,D',D'' of sizes 2n/9+1, 2n/9, 2n/9, n/6, n/6-1 with minimum
/// semidegree 7n/18 - 1 and no perfect transitive-triangle packing.
/// D = D' ∪ D'' carries a regular tournament, D' being its lowest labels.
/// Requires 18 | n.
Construction t3_extremal(std::size_t n);

/// Order 6m+3: A -> B -> C -> A complete, |A| = |B| = m+1, C a regular
/// tournament on 4m+1 vertices. Minimum total degree (5n-3)/6.
Construction yuster_extremal(std::size_t m);

/// Three independent parts of size n/3 with A -> B -> C -> A complete.
Construction cyclic_blowup(std::size_t n);

/// Dispatch by family. For yuster-extremal `size` is m; for the two
/// tournament families it is the order q.
Construction construct(Family family, std::size_t size);

}  // namespace orient
