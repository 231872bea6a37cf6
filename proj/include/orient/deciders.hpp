#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "orient/graph.hpp"
#include "orient/subgraph_search.hpp"

namespace orient {

/// Cyclic ordering v_0..v_{n-1} with v_i -> v_{i+1} and v_i -> v_{i+2}
/// (indices mod n).
struct SquareHamCertificate {
  std::vector<Vertex> ordering;
};

/// Vertex partition into transitive tournaments of equal size, each listed
/// in its transitive order.
struct TkPacking {
  std::vector<TransitiveWitness> blocks;
};

enum class Verdict { kYes, kNo, kTimeout };

std::string_view verdict_name(Verdict v);

template <typename Certificate>
struct DecisionOutcome {
  Verdict verdict = Verdict::kNo;
  std::optional<Certificate> certificate;  // set iff verdict == kYes
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct DeciderOptions {
  /// No budget means the search runs to completion.
  std::optional<std::chrono::duration<double>> budget;
  /// Walk candidates in reverse order. Verdicts must not depend on it; the
  /// search harness uses it for independent re-verification.
  bool reverse_order = false;
};

/// Exact decision of whether g contains the square of a Hamilton cycle.
/// Vertex 0 is fixed as v_0; orders below 5 are answered No immediately.
DecisionOutcome<SquareHamCertificate> square_hamilton(const OrientedGraph& g,
                                                      const DeciderOptions& options = {});

/// Throws PreconditionError unless cert is a permutation of the vertices.
bool validate_square_certificate(const OrientedGraph& g, const SquareHamCertificate& cert);

/// Exact-cover search for a perfect packing with transitive k-sets.
DecisionOutcome<TkPacking> decide_perfect_t_packing(const OrientedGraph& g, std::size_t k,
                                                    const DeciderOptions& options = {});

/// Unbudgeted form of decide_perfect_t_packing.
std::optional<TkPacking> perfect_t_packing(const OrientedGraph& g, std::size_t k);

bool validate_packing(const OrientedGraph& g, const TkPacking& p, std::size_t k);

}  // namespace orient
