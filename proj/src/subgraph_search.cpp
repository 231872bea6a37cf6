#include "orient/subgraph_search.hpp"

#include <algorithm>

namespace orient {

bool is_transitive_witness(const OrientedGraph& g, const TransitiveWitness& w) {
  for (std::size_t i = 0; i < w.order.size(); ++i) {
    if (w.order[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < w.order.size(); ++j)
      if (!g.has_edge(w.order[i], w.order[j])) return false;
  }
  return true;
}

namespace {

bool extend_chain(const OrientedGraph& g, const VertexSet& candidates, std::size_t need,
                  std::vector<Vertex>& chain) {
  if (need == 0) return true;
  if (candidates.count() < need) return false;

  struct Ranked {
    std::size_t out;
    Vertex v;
  };
  std::vector<Ranked> ranked;
  candidates.for_each([&](Vertex v) { ranked.push_back({g.out(v).count_and(candidates), v}); });
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    return a.out != b.out ? a.out > b.out : a.v < b.v;
  });
  for (const auto& [out, v] : ranked) {
    // Sorted by out-degree, so nothing later can head a long enough chain.
    if (out + 1 < need) break;
    chain.push_back(v);
    if (extend_chain(g, candidates & g.out(v), need - 1, chain)) return true;
    chain.pop_back();
  }
  return false;
}

bool visit_containing(const OrientedGraph& g, std::size_t need, Vertex v, bool have_v,
                      const VertexSet& candidates, std::vector<Vertex>& chain,
                      const std::function<bool(const std::vector<Vertex>&)>& visit) {
  if (need == 0) return visit(chain);
  if (candidates.count() < need) return true;
  VertexSet options = candidates;
  if (!have_v) {
    if (!candidates.contains(v)) return true;
    // Everything before v must point into v, and v needs a slot.
    VertexSet before_v(g.order());
    if (need > 1) before_v = g.in(v);
    before_v.insert(v);
    options &= before_v;
  }
  bool keep_going = true;
  options.for_each([&](Vertex c) {
    if (!keep_going) return;
    chain.push_back(c);
    keep_going = visit_containing(g, need - 1, v, have_v || c == v, candidates & g.out(c), chain, visit);
    chain.pop_back();
  });
  return keep_going;
}

}  // namespace

std::optional<TransitiveWitness> find_transitive_within(const OrientedGraph& g, std::size_t k,
                                                        const VertexSet& allowed) {
  std::vector<Vertex> chain;
  chain.reserve(k);
  if (!extend_chain(g, allowed, k, chain)) return std::nullopt;
  return TransitiveWitness{std::move(chain)};
}

std::optional<TransitiveWitness> contains_transitive(const OrientedGraph& g, std::size_t k) {
  return find_transitive_within(g, k, g.all());
}

std::vector<TransitiveWitness> enumerate_transitive_triangles(const OrientedGraph& g) {
  std::vector<TransitiveWitness> result;
  for (Vertex source = 0; source < g.order(); ++source) {
    g.out(source).for_each([&](Vertex middle) {
      (g.out(source) & g.out(middle)).for_each([&](Vertex sink) {
        result.push_back(TransitiveWitness{{source, middle, sink}});
      });
    });
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<TransitiveWitness> extract_disjoint_transitive(const OrientedGraph& g, std::size_t k,
                                                           std::size_t count,
                                                           const VertexSet& forbidden) {
  std::vector<TransitiveWitness> result;
  VertexSet residual = g.all() - forbidden;
  while (result.size() < count) {
    auto w = find_transitive_within(g, k, residual);
    if (!w || w->order.empty()) break;
    for (Vertex v : w->order) residual.erase(v);
    result.push_back(std::move(*w));
  }
  return result;
}

bool for_each_transitive_containing(const OrientedGraph& g, std::size_t k, Vertex v,
                                    const VertexSet& allowed,
                                    const std::function<bool(const std::vector<Vertex>&)>& visit) {
  if (k == 0 || !allowed.contains(v)) return true;
  std::vector<Vertex> chain;
  chain.reserve(k);
  return visit_containing(g, k, v, false, allowed, chain, visit);
}

}  // namespace orient
