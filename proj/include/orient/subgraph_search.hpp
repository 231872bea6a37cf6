#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "orient/graph.hpp"

namespace orient {

/// Vertices v_1..v_k with v_i -> v_j for every i < j.
struct TransitiveWitness {
  std::vector<Vertex> order;

  std::size_t size() const { return order.size(); }
  friend bool operator==(const TransitiveWitness&, const TransitiveWitness&) = default;
  friend auto operator<=>(const TransitiveWitness&, const TransitiveWitness&) = default;
};

/// True iff the listed vertices are distinct and every forward pair is an edge.
bool is_transitive_witness(const OrientedGraph& g, const TransitiveWitness& w);

/// Exhaustive search for a transitive k-subtournament. Candidates at each
/// level are tried in decreasing out-degree inside the candidate set, ties
/// by label; the first chain found is returned. k = 0 yields the empty
/// witness; k > order() yields nothing.
std::optional<TransitiveWitness> contains_transitive(const OrientedGraph& g, std::size_t k);

/// As contains_transitive, restricted to vertices of `allowed`.
std::optional<TransitiveWitness> find_transitive_within(const OrientedGraph& g, std::size_t k,
                                                        const VertexSet& allowed);

/// Every transitive triangle once, in its transitive order, sorted.
std::vector<TransitiveWitness> enumerate_transitive_triangles(const OrientedGraph& g);

/// Greedily extracts up to `count` vertex-disjoint transitive k-sets that
/// avoid `forbidden`. A short result means the residual search failed.
std::vector<TransitiveWitness> extract_disjoint_transitive(const OrientedGraph& g, std::size_t k,
                                                           std::size_t count,
                                                           const VertexSet& forbidden);

/// Calls `visit` with each transitive k-set inside `allowed` that contains
/// `v`, in transitive order. Stops early when `visit` returns false.
/// Returns false iff stopped early.
bool for_each_transitive_containing(const OrientedGraph& g, std::size_t k, Vertex v,
                                    const VertexSet& allowed,
                                    const std::function<bool(const std::vector<Vertex>&)>& visit);

}  // namespace orient
