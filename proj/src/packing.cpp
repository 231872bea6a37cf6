#include "orient/packing.hpp"

#include <algorithm>
#include <fstream>

#include "orient/errors.hpp"
#include "search_support.hpp"

namespace orient {

using nlohmann::json;

std::string_view provenance_name(Provenance p) {
  return p == Provenance::kComputed ? "computed" : "literature";
}

void RamseyTable::set_oriented(std::size_t k, RamseyEntry e) { oriented_[k] = e; }
void RamseyTable::set_tiling(std::size_t k, RamseyEntry e) { tiling_[k] = e; }

std::optional<RamseyEntry> RamseyTable::oriented(std::size_t k) const {
  if (auto it = oriented_.find(k); it != oriented_.end()) return it->second;
  if (k >= 7 && k - 7 < 57) {
    return RamseyEntry{std::size_t{54} << (k - 7), Provenance::kLiterature, true};
  }
  return std::nullopt;
}

std::optional<RamseyEntry> RamseyTable::tiling(std::size_t k) const {
  if (auto it = tiling_.find(k); it != tiling_.end()) return it->second;
  return std::nullopt;
}

void RamseyTable::merge(const RamseyTable& other) {
  for (const auto& [k, e] : other.oriented_) oriented_[k] = e;
  for (const auto& [k, e] : other.tiling_) tiling_[k] = e;
}

void RamseyTable::validate() const {
  for (const auto* entries : {&oriented_, &tiling_}) {
    std::size_t previous = 0;
    for (const auto& [k, e] : *entries) {
      if (k == 0 || e.value == 0) throw PreconditionError("Ramsey table entries must be positive");
      if (e.value < previous) {
        throw PreconditionError("Ramsey table values must be nondecreasing in k (k = " + std::to_string(k) + ")");
      }
      previous = e.value;
    }
  }
}

namespace {

std::map<std::size_t, RamseyEntry> entries_from_json(const json& section) {
  std::map<std::size_t, RamseyEntry> out;
  if (section.is_null()) return out;
  if (!section.is_object()) throw PreconditionError("Ramsey table section must be an object");
  for (const auto& [key, value] : section.items()) {
    std::size_t k = 0;
    try {
      k = std::stoul(key);
    } catch (const std::exception&) {
      throw PreconditionError("Ramsey table key is not a number: " + key);
    }
    RamseyEntry e;
    if (!value.contains("value") || !value["value"].is_number_unsigned()) {
      throw PreconditionError("Ramsey table entry " + key + " needs an unsigned \"value\"");
    }
    e.value = value["value"].get<std::size_t>();
    const std::string prov = value.value("provenance", std::string("literature"));
    if (prov == "computed") {
      e.provenance = Provenance::kComputed;
    } else if (prov == "literature") {
      e.provenance = Provenance::kLiterature;
    } else {
      throw PreconditionError("unknown provenance \"" + prov + "\"");
    }
    e.upper_bound = value.value("bound", std::string("exact")) == "upper";
    out[k] = e;
  }
  return out;
}

json entries_to_json(const std::map<std::size_t, RamseyEntry>& entries) {
  json out = json::object();
  for (const auto& [k, e] : entries) {
    json item = {{"value", e.value}, {"provenance", provenance_name(e.provenance)}};
    if (e.upper_bound) item["bound"] = "upper";
    out[std::to_string(k)] = item;
  }
  return out;
}

}  // namespace

RamseyTable RamseyTable::from_json(const json& j) {
  if (!j.is_object()) throw PreconditionError("Ramsey table must be a JSON object");
  RamseyTable t;
  try {
    t.oriented_ = entries_from_json(j.value("oriented", json()));
    t.tiling_ = entries_from_json(j.value("tiling", json()));
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("malformed Ramsey table: ") + e.what());
  }
  t.validate();
  return t;
}

json RamseyTable::to_json() const {
  return {{"oriented", entries_to_json(oriented_)}, {"tiling", entries_to_json(tiling_)}};
}

RamseyTable RamseyTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open Ramsey table " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw PreconditionError("cannot parse Ramsey table " + path + ": " + e.what());
  }
  return from_json(j);
}

std::pair<TransitiveWitness, TransitiveWitness> patch_leftover(const TransitiveWitness& tprime,
                                                               Vertex x, const OrientedGraph& g,
                                                               std::size_t k) {
  if (k == 0 || tprime.size() != 2 * k - 1 || !is_transitive_witness(g, tprime)) {
    throw PreconditionError("patch_leftover needs a valid transitive set of size 2k-1");
  }
  if (x >= g.order() || std::find(tprime.order.begin(), tprime.order.end(), x) != tprime.order.end()) {
    throw PreconditionError("patch_leftover: leftover vertex must lie outside the reserved set");
  }
  std::vector<Vertex> outs;
  std::vector<Vertex> ins;
  for (Vertex v : tprime.order) {
    if (g.has_edge(x, v)) outs.push_back(v);
    if (g.has_edge(v, x)) ins.push_back(v);
  }
  TransitiveWitness joined;
  std::vector<Vertex> taken;
  if (outs.size() >= k) {
    taken.assign(outs.begin(), outs.begin() + static_cast<std::ptrdiff_t>(k - 1));
    joined.order.push_back(x);
    joined.order.insert(joined.order.end(), taken.begin(), taken.end());
  } else if (ins.size() >= k) {
    taken.assign(ins.begin(), ins.begin() + static_cast<std::ptrdiff_t>(k - 1));
    joined.order = taken;
    joined.order.push_back(x);
  } else {
    throw PreconditionError("patch_leftover: leftover vertex is not adjacent to the whole reserved set");
  }
  TransitiveWitness rest;
  for (Vertex v : tprime.order)
    if (std::find(taken.begin(), taken.end(), v) == taken.end()) rest.order.push_back(v);
  return {std::move(joined), std::move(rest)};
}

namespace {

std::size_t required_entry(const RamseyTable& table, std::size_t k) {
  auto e = table.oriented(k);
  if (!e) throw PreconditionError("Ramsey table has no value for R(" + std::to_string(k) + ")");
  return e->value;
}

TkPacking pair_along_edges(const OrientedGraph& t) {
  TkPacking p;
  for (Vertex v = 0; v + 1 < t.order(); v += 2) {
    p.blocks.push_back(TransitiveWitness{t.has_edge(v, v + 1) ? std::vector<Vertex>{v, v + 1}
                                                               : std::vector<Vertex>{v + 1, v}});
  }
  return p;
}

}  // namespace

std::size_t caro_min_order(std::size_t k, const RamseyTable& table) {
  if (k == 0) throw PreconditionError("block size must be at least 1");
  const std::size_t rk = required_entry(table, k);
  const std::size_t r2k = required_entry(table, 2 * k - 1);
  const std::size_t ell = rk / k * k;
  if (ell == 0) throw PreconditionError("R(k) must be at least k");
  return std::max((ell - 1) * (2 * k - 1) + r2k, 2 * k * ell);
}

TkPacking caro_pack(const OrientedGraph& tournament, std::size_t k, const RamseyTable& table,
                    CaroTrace* trace) {
  const OrientedGraph& t = tournament;
  const std::size_t n = t.order();
  if (!t.is_tournament()) throw PreconditionError("caro_pack needs a tournament");
  if (k == 0 || n % k != 0) throw PreconditionError("caro_pack needs k to divide the order");
  CaroTrace local;
  CaroTrace& tr = trace ? *trace : local;
  tr = CaroTrace{};

  if (k == 2 && n < caro_min_order(k, table)) {
    tr.direct_pairing = true;
    return pair_along_edges(t);
  }
  const std::size_t bound = caro_min_order(k, table);
  if (n < bound) {
    throw PreconditionError("caro_pack needs order >= " + std::to_string(bound) + " for k = " +
                            std::to_string(k) + ", got " + std::to_string(n));
  }
  const std::size_t ell = required_entry(table, k) / k * k;
  tr.reserved_copies = ell;

  const auto reserved = extract_disjoint_transitive(t, 2 * k - 1, ell, VertexSet(n));
  if (reserved.size() != ell) {
    throw StageFailure("caro_pack stage 1: found only " + std::to_string(reserved.size()) + " of " +
                       std::to_string(ell) + " disjoint transitive " + std::to_string(2 * k - 1) +
                       "-sets; is R(" + std::to_string(2 * k - 1) + ") in the table too small?");
  }
  VertexSet uncovered = t.all();
  for (const auto& w : reserved)
    for (Vertex v : w.order) uncovered.erase(v);
  tr.reserved_vertices = n - uncovered.count();

  TkPacking packing;
  while (uncovered.count() > ell) {
    auto block = find_transitive_within(t, k, uncovered);
    if (!block) {
      throw StageFailure("caro_pack stage 2: no transitive " + std::to_string(k) + "-set among " +
                         std::to_string(uncovered.count()) + " uncovered vertices; is R(" +
                         std::to_string(k) + ") in the table too small?");
    }
    for (Vertex v : block->order) uncovered.erase(v);
    packing.blocks.push_back(std::move(*block));
  }
  tr.uncovered_after_fill = uncovered.count();
  if (tr.uncovered_after_fill != ell) {
    throw StageFailure("caro_pack stage 2: " + std::to_string(tr.uncovered_after_fill) +
                       " vertices left uncovered, expected " + std::to_string(ell));
  }

  const std::vector<Vertex> leftovers = uncovered.to_vector();
  for (std::size_t i = 0; i < leftovers.size(); ++i) {
    auto [joined, rest] = patch_leftover(reserved[i], leftovers[i], t, k);
    packing.blocks.push_back(std::move(joined));
    packing.blocks.push_back(std::move(rest));
  }
  if (!validate_packing(t, packing, k)) throw StageFailure("caro_pack produced an invalid packing");
  return packing;
}

namespace {

// m-cliques of the underlying undirected graph containing v, inside `allowed`.
void for_each_clique_containing(const OrientedGraph& g, std::size_t m, Vertex v, const VertexSet& allowed,
                                const detail::ExactCover::Visit& visit) {
  std::vector<Vertex> clique{v};
  VertexSet start = (g.out(v) | g.in(v)) & allowed;
  std::function<bool(const VertexSet&, Vertex)> grow = [&](const VertexSet& candidates, Vertex from) {
    if (clique.size() == m) {
      std::vector<Vertex> sorted = clique;
      std::sort(sorted.begin(), sorted.end());
      return visit(sorted);
    }
    if (candidates.count() < m - clique.size()) return true;
    for (Vertex c = candidates.next(from); c < candidates.size(); c = candidates.next(c + 1)) {
      clique.push_back(c);
      const bool more = grow(candidates & (g.out(c) | g.in(c)), c + 1);
      clique.pop_back();
      if (!more) return false;
    }
    return true;
  };
  if (allowed.contains(v)) grow(start, 0);
}

}  // namespace

TkPacking hs_pack(const OrientedGraph& g, std::size_t k, const RamseyTable& table, HsTrace* trace) {
  const std::size_t n = g.order();
  if (k == 0 || n % k != 0) throw PreconditionError("hs_pack needs k to divide the order");
  auto entry = table.tiling(k);
  if (!entry) throw PreconditionError("Ramsey table has no value for TR(" + std::to_string(k) + ")");
  const std::size_t m = entry->value;
  if (m % k != 0) throw PreconditionError("TR(k) must be divisible by k");
  const std::size_t delta = degrees(g).delta_total;
  if (m * delta < (m - 1) * n) {
    throw PreconditionError("hs_pack needs minimum degree >= (1 - 1/" + std::to_string(m) + ") n, got " +
                            std::to_string(delta));
  }
  HsTrace local;
  HsTrace& tr = trace ? *trace : local;
  tr = HsTrace{};

  TkPacking packing;
  VertexSet residual = g.all();
  while (residual.count() % m != 0) {
    auto block = find_transitive_within(g, k, residual);
    if (!block) throw StageFailure("hs_pack: no transitive " + std::to_string(k) + "-set left while trimming");
    for (Vertex v : block->order) residual.erase(v);
    packing.blocks.push_back(std::move(*block));
    ++tr.adjustment_blocks;
  }
  tr.residual_order = residual.count();

  detail::Deadline unlimited(std::nullopt);
  detail::ExactCover cover(
      [&](Vertex v, const VertexSet& uncovered, const detail::ExactCover::Visit& visit) {
        for_each_clique_containing(g, m, v, uncovered, visit);
      },
      unlimited, false);
  if (cover.solve(residual) != detail::ExactCover::Result::kFound) {
    throw StageFailure("hs_pack: no perfect " + std::to_string(m) + "-clique packing of the residual graph");
  }
  tr.clique_blocks = cover.blocks().size();

  for (const auto& clique : cover.blocks()) {
    const OrientedGraph sub = induced_subgraph(g, clique);
    auto inner = perfect_t_packing(sub, k);
    if (!inner) {
      throw StageFailure("hs_pack: a tournament of order TR(" + std::to_string(k) +
                         ") has no perfect packing; is TR(k) in the table wrong?");
    }
    for (const auto& block : inner->blocks) {
      TransitiveWitness mapped;
      for (Vertex v : block.order) mapped.order.push_back(clique[v]);
      packing.blocks.push_back(std::move(mapped));
    }
  }
  if (!validate_packing(g, packing, k)) throw StageFailure("hs_pack produced an invalid packing");
  return packing;
}

}  // namespace orient
