#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orient/graph.hpp"
#include "orient/packing.hpp"
#include "orient/subgraph_search.hpp"

namespace orient {

inline constexpr std::size_t kDefaultEnumerationCeiling = 7;
inline constexpr std::size_t kMaxEnumerationCeiling = 8;

/// One representative per isomorphism class of tournaments on n vertices,
/// each in canonical labelling and sorted by canonical bytes. Built by
/// extending every class on n-1 vertices with a new vertex in all 2^(n-1)
/// ways and keeping the first child with each canonical form.
std::vector<OrientedGraph> enumerate_tournaments(std::size_t n,
                                                 std::size_t ceiling = kDefaultEnumerationCeiling);

struct EnumerationStats {
  std::size_t n = 0;
  std::size_t count = 0;
  std::vector<std::string> witnesses;  // canonical digraph6 of members failing the predicate
};

EnumerationStats enumeration_stats(std::size_t n, const std::function<bool(const OrientedGraph&)>& predicate,
                                   std::size_t ceiling = kDefaultEnumerationCeiling);

enum class RamseyStatus { kExact, kLowerBound };

/// R(k) <= 2 R(k-1): in a tournament on 2 R(k-1) vertices a vertex of
/// maximum out-degree has at least R(k-1) out-neighbours.
struct DoublingCertificate {
  std::size_t k = 0;
  std::size_t order = 0;      // 2 R(k-1)
  std::size_t sub_value = 0;  // R(k-1), itself exact
};

struct RamseyResult {
  std::size_t k = 0;
  /// Exact value, or for kLowerBound the smallest order not yet ruled out
  /// (the number is at least `value`).
  std::size_t value = 0;
  RamseyStatus status = RamseyStatus::kExact;
  /// Extremal example: an order value-1 tournament without T_k for
  /// oriented numbers; a smaller-order tournament without a perfect packing
  /// for tiling numbers. Empty when none exists.
  std::optional<OrientedGraph> witness;
  std::optional<DoublingCertificate> doubling;
};

/// Smallest n such that every tournament on n vertices contains T_k, by
/// enumeration up to `ceiling`. If enumeration reaches the ceiling without
/// settling k and the doubling bound 2 R(k-1) equals ceiling + 1, that
/// bound closes the gap.
RamseyResult oriented_ramsey(std::size_t k, std::size_t ceiling = kDefaultEnumerationCeiling);

/// Smallest n divisible by k such that every tournament on n vertices has a
/// perfect transitive k-packing.
RamseyResult tiling_ramsey(std::size_t k, std::size_t ceiling = kDefaultEnumerationCeiling);

/// Transitive k-set found by repeatedly taking a vertex of maximum
/// out-degree and descending into its out-neighbourhood. Succeeds on every
/// tournament with at least 2^(k-1) vertices; independent of
/// contains_transitive.
std::optional<TransitiveWitness> doubling_transitive(const OrientedGraph& tournament, std::size_t k);

/// R(1..4) and TR(1..3) computed by enumeration, provenance "computed".
RamseyTable computed_table(std::size_t ceiling = kDefaultEnumerationCeiling);

/// Messages for computed entries that disagree with a fresh computation.
std::vector<std::string> verify_computed_entries(const RamseyTable& table,
                                                 std::size_t ceiling = kDefaultEnumerationCeiling);

std::string_view status_name(RamseyStatus s);

}  // namespace orient
