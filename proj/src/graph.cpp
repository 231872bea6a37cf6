#include "orient/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include "orient/errors.hpp"

namespace orient {

OrientedGraph::OrientedGraph(std::size_t n, const std::vector<Edge>& edges)
    : out_(n, VertexSet(n)), in_(n, VertexSet(n)) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has an endpoint outside 0.." + std::to_string(n) + "-1");
    }
    if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
    if (out_[v].contains(u)) {
      throw PreconditionError("edges " + std::to_string(u) + "->" + std::to_string(v) + " and " +
                              std::to_string(v) + "->" + std::to_string(u) +
                              " form a 2-cycle");
    }
    if (out_[u].contains(v)) continue;
    out_[u].insert(v);
    in_[v].insert(u);
    ++edges_;
  }
}

std::vector<Edge> OrientedGraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edges_);
  for (Vertex u = 0; u < order(); ++u) out_[u].for_each([&](Vertex v) { result.emplace_back(u, v); });
  return result;
}

DegreeSummary degrees(const OrientedGraph& g) {
  DegreeSummary s;
  if (g.order() == 0) return s;
  s.delta_plus = s.delta_minus = s.delta_total = g.order();
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::size_t out = g.out_degree(v);
    const std::size_t in = g.in_degree(v);
    s.delta_plus = std::min(s.delta_plus, out);
    s.delta_minus = std::min(s.delta_minus, in);
    s.delta_total = std::min(s.delta_total, out + in);
  }
  s.delta_zero = std::min(s.delta_plus, s.delta_minus);
  return s;
}

OrientedGraph induced_subgraph(const OrientedGraph& g, const VertexSet& keep) {
  if (keep.size() != g.order()) throw PreconditionError("vertex set sized for a different graph");
  return induced_subgraph(g, keep.to_vector());
}

OrientedGraph induced_subgraph(const OrientedGraph& g, const std::vector<Vertex>& keep) {
  std::vector<Vertex> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Vertex> index(g.order(), 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= g.order()) {
      throw PreconditionError("vertex " + std::to_string(sorted[i]) + " is not in the graph");
    }
    index[sorted[i]] = static_cast<Vertex>(i);
  }
  const VertexSet members = VertexSet::of(g.order(), sorted);
  std::vector<Edge> edges;
  for (Vertex u : sorted) {
    (g.out(u) & members).for_each([&](Vertex v) { edges.emplace_back(index[u], index[v]); });
  }
  return OrientedGraph(sorted.size(), edges);
}

OrientedGraph relabel(const OrientedGraph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.order()) throw PreconditionError("permutation has the wrong length");
  std::vector<bool> seen(g.order(), false);
  for (Vertex p : perm) {
    if (p >= g.order() || seen[p]) throw PreconditionError("not a permutation");
    seen[p] = true;
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return OrientedGraph(g.order(), edges);
}

// digraph6 ---------------------------------------------------------------

namespace {

constexpr char kDigraph6Header = '&';

void append_order(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

int sextet(char c) {
  const int value = static_cast<unsigned char>(c) - 63;
  if (value < 0 || value > 63) throw PreconditionError("digraph6: byte outside the printable range");
  return value;
}

}  // namespace

std::string encode_digraph6(const OrientedGraph& g) {
  const std::size_t n = g.order();
  std::string out(1, kDigraph6Header);
  append_order(out, n);
  int acc = 0;
  int filled = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

OrientedGraph decode_digraph6(std::string_view bytes) {
  if (!bytes.empty() && bytes.back() == '\n') bytes.remove_suffix(1);
  if (bytes.empty() || bytes.front() != kDigraph6Header) {
    throw PreconditionError("digraph6: missing '&' header");
  }
  bytes.remove_prefix(1);
  if (bytes.empty()) throw PreconditionError("digraph6: missing order");

  std::size_t n = 0;
  auto take = [&](std::size_t count) {
    if (bytes.size() < count) throw PreconditionError("digraph6: truncated order field");
    std::size_t value = 0;
    for (std::size_t i = 0; i < count; ++i) value = (value << 6) | static_cast<std::size_t>(sextet(bytes[i]));
    bytes.remove_prefix(count);
    return value;
  };
  if (bytes.front() != 126) {
    n = take(1);
  } else if (bytes.size() >= 2 && bytes[1] == 126) {
    bytes.remove_prefix(2);
    n = take(6);
  } else {
    bytes.remove_prefix(1);
    n = take(3);
  }
  if (n > VertexSet::kMaxVertices) throw PreconditionError("digraph6: order too large");

  const std::size_t bits = n * n;
  const std::size_t expected = (bits + 5) / 6;
  if (bytes.size() < expected) throw PreconditionError("digraph6: truncated adjacency bits");
  if (bytes.size() > expected) throw PreconditionError("digraph6: trailing bytes after adjacency bits");

  std::vector<Edge> edges;
  for (std::size_t b = 0; b < expected * 6; ++b) {
    const bool set = ((sextet(bytes[b / 6]) >> (5 - b % 6)) & 1) != 0;
    if (!set) continue;
    if (b >= bits) throw PreconditionError("digraph6: nonzero padding bits");
    edges.emplace_back(static_cast<Vertex>(b / n), static_cast<Vertex>(b % n));
  }
  return OrientedGraph(n, edges);
}

// Canonical form ---------------------------------------------------------

namespace {

// Colour refinement by (colour, out-neighbour colours, in-neighbour colours)
// until the partition stops splitting. Colour ids are ranks of signatures,
// so they are isomorphism invariant.
std::vector<int> refine_colours(const OrientedGraph& g) {
  const std::size_t n = g.order();
  std::vector<int> colour(n, 0);
  std::size_t classes = n == 0 ? 0 : 1;
  while (true) {
    std::vector<std::vector<int>> signature(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> outs;
      std::vector<int> ins;
      g.out(v).for_each([&](Vertex w) { outs.push_back(colour[w]); });
      g.in(v).for_each([&](Vertex w) { ins.push_back(colour[w]); });
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      auto& sig = signature[v];
      sig.push_back(colour[v]);
      sig.push_back(static_cast<int>(outs.size()));
      sig.insert(sig.end(), outs.begin(), outs.end());
      sig.insert(sig.end(), ins.begin(), ins.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& sig : signature) rank.emplace(sig, 0);
    int next = 0;
    for (auto& [sig, r] : rank) r = next++;
    for (Vertex v = 0; v < n; ++v) colour[v] = rank[signature[v]];
    if (rank.size() == classes) return colour;
    classes = rank.size();
  }
}

class CanonicalSearch {
 public:
  CanonicalSearch(const OrientedGraph& g, std::vector<int> colour)
      : g_(g), colour_(std::move(colour)), n_(g.order()) {
    slot_colour_ = colour_;
    std::sort(slot_colour_.begin(), slot_colour_.end());
    // Same-coloured vertices with equal neighbourhoods are swapped by an
    // automorphism, so only the first of each twin class needs a branch.
    twin_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      twin_[v] = v;
      for (Vertex u = 0; u < v; ++u) {
        if (twin_[u] == u && colour_[u] == colour_[v] && g.out(u) == g.out(v) && g.in(u) == g.in(v)) {
          twin_[v] = u;
          break;
        }
      }
    }
    placed_.reserve(n_);
    keys_.reserve(n_);
  }

  std::vector<Vertex> run() {
    VertexSet unplaced = VertexSet::full(n_);
    descend(unplaced, false);
    return best_order_;
  }

 private:
  // Two bits per earlier slot q: (v -> placed[q], placed[q] -> v), earliest
  // slot most significant.
  std::uint64_t key(Vertex v) const {
    std::uint64_t k = 0;
    for (Vertex q : placed_) {
      k = (k << 2) | (g_.has_edge(v, q) ? 2u : 0u) | (g_.has_edge(q, v) ? 1u : 0u);
    }
    return k;
  }

  void descend(VertexSet& unplaced, bool better) {
    const std::size_t p = placed_.size();
    if (p == n_) {
      best_keys_ = keys_;
      best_order_ = placed_;
      return;
    }
    std::uint64_t min_key = ~std::uint64_t{0};
    std::vector<Vertex> ties;
    unplaced.for_each([&](Vertex v) {
      if (colour_[v] != slot_colour_[p]) return;
      const std::uint64_t k = key(v);
      if (k < min_key) {
        min_key = k;
        ties.clear();
      }
      if (k == min_key) ties.push_back(v);
    });
    if (!better && !best_keys_.empty()) {
      if (min_key > best_keys_[p]) return;
      if (min_key < best_keys_[p]) better = true;
    }
    VertexSet tried(n_);
    for (Vertex v : ties) {
      if (tried.contains(twin_[v])) continue;
      tried.insert(twin_[v]);
      placed_.push_back(v);
      keys_.push_back(min_key);
      unplaced.erase(v);
      descend(unplaced, better);
      unplaced.insert(v);
      keys_.pop_back();
      placed_.pop_back();
      // After the first completed leaf the best string shares this prefix,
      // so later siblings must compare against it again.
      better = false;
      if (best_keys_[p] < min_key) return;
    }
  }

  const OrientedGraph& g_;
  std::vector<int> colour_;
  std::vector<int> slot_colour_;
  std::vector<Vertex> twin_;
  std::size_t n_;
  std::vector<Vertex> placed_;
  std::vector<std::uint64_t> keys_;
  std::vector<Vertex> best_order_;
  std::vector<std::uint64_t> best_keys_;
};

}  // namespace

std::string canonical_form(const OrientedGraph& g, std::size_t max_order) {
  if (g.order() > max_order) {
    throw PreconditionError("canonical_form: order " + std::to_string(g.order()) +
                            " exceeds configured maximum " + std::to_string(max_order));
  }
  if (max_order > 31) throw PreconditionError("canonical_form: maximum order above 31 unsupported");
  const std::vector<Vertex> order = CanonicalSearch(g, refine_colours(g)).run();
  std::vector<Vertex> perm(g.order());
  for (std::size_t slot = 0; slot < order.size(); ++slot) perm[order[slot]] = static_cast<Vertex>(slot);
  return encode_digraph6(relabel(g, perm));
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace orient
