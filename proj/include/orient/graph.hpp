#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orient/vertex_set.hpp"

namespace orient {

using Edge = std::pair<Vertex, Vertex>;

/// Loopless digraph without 2-cycles, stored as bit-parallel out- and
/// in-adjacency rows. Immutable once built.
class OrientedGraph {
 public:
  OrientedGraph() = default;

  /// Builds a graph on vertices 0..n-1 with exactly the given edges.
  /// Throws PreconditionError on a loop, an antiparallel pair or an
  /// out-of-range endpoint. Duplicate listings of the same edge are allowed.
  OrientedGraph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const { return out_.size(); }
  std::size_t edge_count() const { return edges_; }

  bool has_edge(Vertex u, Vertex v) const { return out_[u].contains(v); }
  bool adjacent(Vertex u, Vertex v) const { return has_edge(u, v) || has_edge(v, u); }

  const VertexSet& out(Vertex v) const { return out_[v]; }
  const VertexSet& in(Vertex v) const { return in_[v]; }
  std::size_t out_degree(Vertex v) const { return out_[v].count(); }
  std::size_t in_degree(Vertex v) const { return in_[v].count(); }

  VertexSet all() const { return VertexSet::full(order()); }

  // Every pair of distinct vertices spans exactly one edge.
  bool is_tournament() const { return edges_ * 2 == order() * (order() - (order() > 0 ? 1 : 0)); }

  std::vector<Edge> edges() const;

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
    return a.out_ == b.out_;
  }

 private:
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  std::size_t edges_ = 0;
};

struct DegreeSummary {
  std::size_t delta_plus = 0;
  std::size_t delta_minus = 0;
  std::size_t delta_zero = 0;
  std::size_t delta_total = 0;
};

/// Minimum out-, in-, semi- and total degree. All zero for the empty graph.
DegreeSummary degrees(const OrientedGraph& g);

/// Subgraph induced on `keep`, relabelled 0..|keep|-1 in ascending order of
/// original label.
OrientedGraph induced_subgraph(const OrientedGraph& g, const VertexSet& keep);
OrientedGraph induced_subgraph(const OrientedGraph& g, const std::vector<Vertex>& keep);

/// Graph with vertex v renamed to perm[v].
OrientedGraph relabel(const OrientedGraph& g, const std::vector<Vertex>& perm);

std::string encode_digraph6(const OrientedGraph& g);
/// Accepts an optional trailing newline. Throws PreconditionError on
/// malformed input or a matrix that is not an oriented graph.
OrientedGraph decode_digraph6(std::string_view bytes);

inline constexpr std::size_t kDefaultCanonicalMaxOrder = 12;

/// Isomorphism-invariant byte string: equal exactly for isomorphic graphs.
/// Throws PreconditionError when order() > max_order.
std::string canonical_form(const OrientedGraph& g,
                           std::size_t max_order = kDefaultCanonicalMaxOrder);

/// FNV-1a, used for short stable identifiers of byte strings.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace orient
