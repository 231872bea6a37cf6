#include "orient/deciders.hpp"

#include <algorithm>

#include "orient/errors.hpp"
#include "search_support.hpp"

namespace orient {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kYes:
      return "yes";
    case Verdict::kNo:
      return "no";
    case Verdict::kTimeout:
      return "timeout";
  }
  return "unknown";
}

namespace {

// Lossy cache of search states proven to have no completion. A state is
// (unvisited set, last two path vertices, v_1); only used when n <= 64.
// Starts small and doubles once inserts exceed the slot count, up to
// 2^max_log2 slots of 16 bytes.
class FailureCache {
 public:
  explicit FailureCache(std::size_t max_log2)
      : slots_(std::size_t{1} << std::min<std::size_t>(16, max_log2)), max_slots_(std::size_t{1} << max_log2) {}

  bool contains(std::uint64_t set, std::uint32_t tail, std::uint32_t second) const {
    const Entry& e = slots_[index(set, tail, second, slots_.size())];
    return e.tag != 0 && e.set == set && e.tail == tail && e.tag == second + 1;
  }

  void insert(std::uint64_t set, std::uint32_t tail, std::uint32_t second) {
    if (++inserts_ > slots_.size() && slots_.size() < max_slots_) grow();
    slots_[index(set, tail, second, slots_.size())] = Entry{set, tail, second + 1};
  }

 private:
  struct Entry {
    std::uint64_t set = 0;
    std::uint32_t tail = 0;
    std::uint32_t tag = 0;
  };

  static std::size_t index(std::uint64_t set, std::uint32_t tail, std::uint32_t second, std::size_t size) {
    std::uint64_t h = set * 0x9e3779b97f4a7c15ull;
    h ^= (static_cast<std::uint64_t>(tail) << 32 | second) * 0xc2b2ae3d27d4eb4full;
    h ^= h >> 29;
    return static_cast<std::size_t>(h & (size - 1));
  }

  void grow() {
    std::vector<Entry> bigger(slots_.size() * 2);
    for (const Entry& e : slots_)
      if (e.tag != 0) bigger[index(e.set, e.tail, e.tag - 1, bigger.size())] = e;
    slots_.swap(bigger);
    inserts_ = 0;
  }

  std::vector<Entry> slots_;
  std::size_t max_slots_;
  std::size_t inserts_ = 0;
};

class SquareCycleSearch {
 public:
  SquareCycleSearch(const OrientedGraph& g, detail::Deadline& deadline, bool reverse)
      : g_(g), n_(g.order()), deadline_(deadline), reverse_(reverse), path_(n_) {
    if (n_ <= 64) cache_.emplace(n_ <= 16 ? 16 : 25);
  }

  Verdict run() {
    path_[0] = 0;
    VertexSet unvisited = VertexSet::full(n_);
    unvisited.erase(0);
    if (extend(1, unvisited)) return Verdict::kYes;
    return timed_out_ ? Verdict::kTimeout : Verdict::kNo;
  }

  const std::vector<Vertex>& path() const { return path_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  // Some edge x -> y with both ends in `pool`.
  bool has_edge_inside(const VertexSet& pool) const {
    bool found = false;
    pool.for_each([&](Vertex x) {
      if (!found && g_.out(x).intersects(pool)) found = true;
    });
    return found;
  }

  // Each unvisited vertex w sits after two consecutive path vertices, which
  // must form an edge inside N^-(w) among the vertices that can still precede
  // it; likewise its two successors inside N^+(w). v_0 needs a predecessor
  // pair from the same pool. A bare count of two in-neighbours is the weaker
  // form of this test.
  bool viable(const VertexSet& unvisited, Vertex prev, Vertex last) const {
    VertexSet preds = unvisited;
    preds.insert(prev);
    preds.insert(last);
    VertexSet succs = unvisited;
    succs.insert(path_[0]);
    succs.insert(path_[1]);
    if (!has_edge_inside(g_.in(path_[0]) & preds)) return false;
    bool ok = true;
    unvisited.for_each([&](Vertex w) {
      if (!ok) return;
      const VertexSet before = g_.in(w) & preds;
      const VertexSet after = g_.out(w) & succs;
      ok = before.count() >= 2 && after.count() >= 2 && has_edge_inside(before) && has_edge_inside(after);
    });
    return ok;
  }

  bool extend(std::size_t pos, VertexSet& unvisited) {
    ++nodes_;
    if (deadline_.expired()) {
      timed_out_ = true;
      return false;
    }
    if (pos == n_) return true;

    const bool cacheable = cache_ && pos >= 2;
    std::uint32_t tail = 0;
    if (cacheable) {
      tail = path_[pos - 2] << 16 | path_[pos - 1];
      if (cache_->contains(unvisited.word(0), tail, path_[1])) return false;
    }

    VertexSet candidates = unvisited & g_.out(path_[pos - 1]);
    if (pos >= 2) candidates &= g_.out(path_[pos - 2]);
    // Closing edges back onto v_0 and v_1.
    if (pos + 1 >= n_) candidates &= g_.in(path_[pos + 1 - n_]);
    if (pos + 2 >= n_) candidates &= g_.in(path_[pos + 2 - n_]);

    std::vector<Vertex> order = candidates.to_vector();
    if (reverse_) std::reverse(order.begin(), order.end());
    for (Vertex c : order) {
      path_[pos] = c;
      unvisited.erase(c);
      const bool go = pos < 2 || viable(unvisited, path_[pos - 1], c);
      if (go && extend(pos + 1, unvisited)) return true;
      unvisited.insert(c);
      if (timed_out_) return false;
    }
    if (cacheable) cache_->insert(unvisited.word(0), tail, path_[1]);
    return false;
  }

  const OrientedGraph& g_;
  std::size_t n_;
  detail::Deadline& deadline_;
  bool reverse_;
  std::vector<Vertex> path_;
  std::optional<FailureCache> cache_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

// Every block meets a T_k-free set F in at most k-1 vertices, so an exact
// cover of U needs |F| <= (k-1)|U|/k. F is grown greedily, once in label
// order and once by increasing degree inside U.
bool exceeds_block_capacity(const OrientedGraph& g, std::size_t k, const VertexSet& uncovered) {
  if (k < 2) return false;
  const std::size_t capacity = (k - 1) * (uncovered.count() / k);
  auto closes_block = [&](Vertex v, const VertexSet& free_set) {
    VertexSet with_v = free_set;
    with_v.insert(v);
    return !for_each_transitive_containing(g, k, v, with_v, [](const std::vector<Vertex>&) { return false; });
  };
  auto grow = [&](const std::vector<Vertex>& order) {
    VertexSet free_set(g.order());
    std::size_t size = 0;
    for (Vertex v : order) {
      if (!closes_block(v, free_set)) {
        free_set.insert(v);
        ++size;
      }
    }
    return size;
  };
  std::vector<Vertex> order = uncovered.to_vector();
  if (grow(order) > capacity) return true;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return (g.out(a) | g.in(a)).count_and(uncovered) < (g.out(b) | g.in(b)).count_and(uncovered);
  });
  return grow(order) > capacity;
}

}  // namespace

DecisionOutcome<SquareHamCertificate> square_hamilton(const OrientedGraph& g,
                                                      const DeciderOptions& options) {
  detail::Deadline deadline(options.budget);
  DecisionOutcome<SquareHamCertificate> outcome;
  // v_i -> v_{i+2} and v_{i+2} -> v_i would coincide as a 2-cycle below 5.
  if (g.order() < 5) {
    outcome.verdict = Verdict::kNo;
    outcome.elapsed = deadline.elapsed();
    return outcome;
  }
  SquareCycleSearch search(g, deadline, options.reverse_order);
  outcome.verdict = search.run();
  outcome.nodes_explored = search.nodes();
  if (outcome.verdict == Verdict::kYes) outcome.certificate = SquareHamCertificate{search.path()};
  outcome.elapsed = deadline.elapsed();
  return outcome;
}

bool validate_square_certificate(const OrientedGraph& g, const SquareHamCertificate& cert) {
  const std::size_t n = g.order();
  if (cert.ordering.size() != n) throw PreconditionError("certificate is not a permutation of the vertices");
  std::vector<bool> seen(n, false);
  for (Vertex v : cert.ordering) {
    if (v >= n || seen[v]) throw PreconditionError("certificate is not a permutation of the vertices");
    seen[v] = true;
  }
  if (n == 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = cert.ordering[i];
    if (!g.has_edge(v, cert.ordering[(i + 1) % n]) || !g.has_edge(v, cert.ordering[(i + 2) % n])) {
      return false;
    }
  }
  return true;
}

DecisionOutcome<TkPacking> decide_perfect_t_packing(const OrientedGraph& g, std::size_t k,
                                                    const DeciderOptions& options) {
  detail::Deadline deadline(options.budget);
  DecisionOutcome<TkPacking> outcome;
  if (k == 0) throw PreconditionError("packing block size must be at least 1");
  if (g.order() % k != 0) {
    outcome.verdict = Verdict::kNo;
    outcome.elapsed = deadline.elapsed();
    return outcome;
  }
  detail::ExactCover cover(
      [&](Vertex v, const VertexSet& uncovered, const detail::ExactCover::Visit& visit) {
        for_each_transitive_containing(g, k, v, uncovered, visit);
      },
      deadline, options.reverse_order,
      [&](const VertexSet& uncovered) { return exceeds_block_capacity(g, k, uncovered); });
  switch (cover.solve(g.all())) {
    case detail::ExactCover::Result::kFound: {
      outcome.verdict = Verdict::kYes;
      TkPacking packing;
      for (const auto& block : cover.blocks()) packing.blocks.push_back(TransitiveWitness{block});
      std::sort(packing.blocks.begin(), packing.blocks.end());
      outcome.certificate = std::move(packing);
      break;
    }
    case detail::ExactCover::Result::kExhausted:
      outcome.verdict = Verdict::kNo;
      break;
    case detail::ExactCover::Result::kTimedOut:
      outcome.verdict = Verdict::kTimeout;
      break;
  }
  outcome.nodes_explored = cover.nodes();
  outcome.elapsed = deadline.elapsed();
  return outcome;
}

std::optional<TkPacking> perfect_t_packing(const OrientedGraph& g, std::size_t k) {
  auto outcome = decide_perfect_t_packing(g, k);
  return std::move(outcome.certificate);
}

bool validate_packing(const OrientedGraph& g, const TkPacking& p, std::size_t k) {
  std::vector<bool> covered(g.order(), false);
  std::size_t total = 0;
  for (const auto& block : p.blocks) {
    if (block.size() != k || !is_transitive_witness(g, block)) return false;
    for (Vertex v : block.order) {
      if (covered[v]) return false;
      covered[v] = true;
      ++total;
    }
  }
  return total == g.order();
}

}  // namespace orient
