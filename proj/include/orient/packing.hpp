#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "json.hpp"
#include "orient/deciders.hpp"
#include "orient/graph.hpp"
#include "orient/subgraph_search.hpp"

namespace orient {

enum class Provenance { kComputed, kLiterature };

struct RamseyEntry {
  std::size_t value = 0;
  Provenance provenance = Provenance::kComputed;
  // The true number is at most `value`.
  bool upper_bound = false;

  friend bool operator==(const RamseyEntry&, const RamseyEntry&) = default;
};

/// Oriented Ramsey numbers R(k) and tiling Ramsey numbers TR(k) with their
/// provenance. Without an explicit R(k) entry for k >= 7 the table answers
/// with the literature bound R(k) <= 54 * 2^(k-7).
class RamseyTable {
 public:
  void set_oriented(std::size_t k, RamseyEntry e);
  void set_tiling(std::size_t k, RamseyEntry e);

  std::optional<RamseyEntry> oriented(std::size_t k) const;
  std::optional<RamseyEntry> tiling(std::size_t k) const;

  const std::map<std::size_t, RamseyEntry>& oriented_entries() const { return oriented_; }
  const std::map<std::size_t, RamseyEntry>& tiling_entries() const { return tiling_; }

  /// Entries from `other` replace entries for the same k.
  void merge(const RamseyTable& other);

  /// Throws PreconditionError if an entry is zero or values decrease in k.
  void validate() const;

  /// {"oriented": {"3": {"value": 4, "provenance": "computed"}}, "tiling": {...}}
  /// An entry may carry "bound": "upper".
  static RamseyTable from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  static RamseyTable load(const std::string& path);

 private:
  std::map<std::size_t, RamseyEntry> oriented_;
  std::map<std::size_t, RamseyEntry> tiling_;
};

std::string_view provenance_name(Provenance p);

/// Splits V(tprime) ∪ {x} into two transitive k-sets. tprime must be a
/// transitive (2k-1)-set not containing x, with x adjacent to all of it.
std::pair<TransitiveWitness, TransitiveWitness> patch_leftover(const TransitiveWitness& tprime,
                                                               Vertex x, const OrientedGraph& g,
                                                               std::size_t k);

struct CaroTrace {
  std::size_t reserved_copies = 0;       // l
  std::size_t reserved_vertices = 0;     // after stage 1
  std::size_t uncovered_after_fill = 0;  // after stage 2
  bool direct_pairing = false;           // k = 2 below the stage bound
};

/// Smallest order accepted by caro_pack for block size k:
/// max((l-1)(2k-1) + R(2k-1), 2kl) with l the largest multiple of k <= R(k).
std::size_t caro_min_order(std::size_t k, const RamseyTable& table);

/// Perfect transitive k-packing of a tournament: reserve l disjoint
/// transitive (2k-1)-sets, fill the rest greedily down to l vertices, then
/// patch each leftover into one reserved set.
TkPacking caro_pack(const OrientedGraph& tournament, std::size_t k, const RamseyTable& table,
                    CaroTrace* trace = nullptr);

struct HsTrace {
  std::size_t adjustment_blocks = 0;
  std::size_t residual_order = 0;
  std::size_t clique_blocks = 0;
};

/// Perfect transitive k-packing of a graph with minimum degree at least
/// (1 - 1/TR(k)) n: trim by single blocks until TR(k) divides the order,
/// cover the rest with TR(k)-cliques of the underlying graph, then pack
/// each clique.
TkPacking hs_pack(const OrientedGraph& g, std::size_t k, const RamseyTable& table,
                  HsTrace* trace = nullptr);

}  // namespace orient
