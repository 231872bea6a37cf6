#include "orient/ramsey.hpp"

#include <algorithm>
#include <map>

#include "orient/deciders.hpp"
#include "orient/errors.hpp"

namespace orient {

std::string_view status_name(RamseyStatus s) {
  return s == RamseyStatus::kExact ? "exact" : "lower-bound";
}

namespace {

void check_order(std::size_t n, std::size_t ceiling) {
  if (ceiling > kMaxEnumerationCeiling) {
    throw PreconditionError("enumeration ceiling above " + std::to_string(kMaxEnumerationCeiling) +
                            " is not supported");
  }
  if (n < 1 || n > ceiling) {
    throw PreconditionError("tournament enumeration needs 1 <= n <= " + std::to_string(ceiling) + ", got " +
                            std::to_string(n));
  }
}

std::vector<OrientedGraph> extend_all(const std::vector<OrientedGraph>& parents, std::size_t n) {
  std::map<std::string, bool> seen;
  const auto fresh = static_cast<Vertex>(n - 1);
  for (const auto& parent : parents) {
    const std::vector<Edge> base = parent.edges();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      std::vector<Edge> edges = base;
      for (Vertex i = 0; i < fresh; ++i) {
        if ((mask >> i) & 1u) {
          edges.emplace_back(fresh, i);
        } else {
          edges.emplace_back(i, fresh);
        }
      }
      seen.emplace(canonical_form(OrientedGraph(n, edges), kMaxEnumerationCeiling), true);
    }
  }
  std::vector<OrientedGraph> out;
  out.reserve(seen.size());
  for (const auto& [bytes, unused] : seen) out.push_back(decode_digraph6(bytes));
  return out;
}

}  // namespace

std::vector<OrientedGraph> enumerate_tournaments(std::size_t n, std::size_t ceiling) {
  check_order(n, ceiling);
  std::vector<OrientedGraph> level{OrientedGraph(1, {})};
  for (std::size_t order = 2; order <= n; ++order) level = extend_all(level, order);
  return level;
}

EnumerationStats enumeration_stats(std::size_t n, const std::function<bool(const OrientedGraph&)>& predicate,
                                   std::size_t ceiling) {
  EnumerationStats stats;
  stats.n = n;
  for (const auto& t : enumerate_tournaments(n, ceiling)) {
    ++stats.count;
    if (!predicate(t)) stats.witnesses.push_back(encode_digraph6(t));
  }
  return stats;
}

std::optional<TransitiveWitness> doubling_transitive(const OrientedGraph& tournament, std::size_t k) {
  TransitiveWitness w;
  VertexSet pool = tournament.all();
  while (w.size() < k) {
    if (pool.empty()) return std::nullopt;
    Vertex best = pool.first();
    std::size_t best_out = 0;
    pool.for_each([&](Vertex v) {
      const std::size_t out = tournament.out(v).count_and(pool);
      if (out > best_out) {
        best_out = out;
        best = v;
      }
    });
    w.order.push_back(best);
    pool &= tournament.out(best);
  }
  return w;
}

RamseyResult oriented_ramsey(std::size_t k, std::size_t ceiling) {
  if (k < 1) throw PreconditionError("oriented_ramsey needs k >= 1");
  if (ceiling < 1) throw PreconditionError("oriented_ramsey needs a ceiling >= 1");
  check_order(ceiling, ceiling);
  RamseyResult result;
  result.k = k;
  std::optional<OrientedGraph> free_example = OrientedGraph(0, {});
  std::vector<OrientedGraph> level{OrientedGraph(1, {})};
  for (std::size_t n = 1; n <= ceiling; ++n) {
    if (n > 1) level = extend_all(level, n);
    std::optional<OrientedGraph> lacking;
    for (const auto& t : level) {
      if (!contains_transitive(t, k)) {
        lacking = t;
        break;
      }
    }
    if (!lacking) {
      result.value = n;
      result.status = RamseyStatus::kExact;
      result.witness = free_example;
      return result;
    }
    free_example = lacking;
  }
  result.witness = free_example;
  result.value = ceiling + 1;
  result.status = RamseyStatus::kLowerBound;
  if (k >= 2) {
    const RamseyResult sub = oriented_ramsey(k - 1, ceiling);
    if (sub.status == RamseyStatus::kExact && 2 * sub.value == ceiling + 1) {
      result.status = RamseyStatus::kExact;
      result.doubling = DoublingCertificate{k, 2 * sub.value, sub.value};
    }
  }
  return result;
}

RamseyResult tiling_ramsey(std::size_t k, std::size_t ceiling) {
  if (k < 1) throw PreconditionError("tiling_ramsey needs k >= 1");
  check_order(std::max<std::size_t>(ceiling, 1), std::max<std::size_t>(ceiling, 1));
  RamseyResult result;
  result.k = k;
  for (std::size_t n = k; n <= ceiling; n += k) {
    std::optional<OrientedGraph> failing;
    for (const auto& t : enumerate_tournaments(n, ceiling)) {
      if (!perfect_t_packing(t, k)) {
        failing = t;
        break;
      }
    }
    if (!failing) {
      result.value = n;
      result.status = RamseyStatus::kExact;
      return result;
    }
    result.witness = failing;
  }
  result.value = (ceiling / k + 1) * k;
  result.status = RamseyStatus::kLowerBound;
  return result;
}

RamseyTable computed_table(std::size_t ceiling) {
  RamseyTable table;
  for (std::size_t k = 1; k <= 4; ++k) {
    const RamseyResult r = oriented_ramsey(k, ceiling);
    if (r.status == RamseyStatus::kExact) table.set_oriented(k, RamseyEntry{r.value, Provenance::kComputed, false});
  }
  for (std::size_t k = 1; k <= 3; ++k) {
    const RamseyResult r = tiling_ramsey(k, ceiling);
    if (r.status == RamseyStatus::kExact) table.set_tiling(k, RamseyEntry{r.value, Provenance::kComputed, false});
  }
  return table;
}

std::vector<std::string> verify_computed_entries(const RamseyTable& table, std::size_t ceiling) {
  std::vector<std::string> problems;
  auto check = [&](const char* name, std::size_t k, const RamseyEntry& e, const RamseyResult& r) {
    if (r.status != RamseyStatus::kExact) {
      problems.push_back(std::string(name) + "(" + std::to_string(k) + ") marked computed but not settled below the ceiling");
    } else if (r.value != e.value) {
      problems.push_back(std::string(name) + "(" + std::to_string(k) + ") = " + std::to_string(e.value) +
                         " but computation gives " + std::to_string(r.value));
    }
  };
  for (const auto& [k, e] : table.oriented_entries())
    if (e.provenance == Provenance::kComputed) check("R", k, e, oriented_ramsey(k, ceiling));
  for (const auto& [k, e] : table.tiling_entries())
    if (e.provenance == Provenance::kComputed) check("TR", k, e, tiling_ramsey(k, ceiling));
  return problems;
}

}  // namespace orient
