#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "orient/vertex_set.hpp"

namespace orient::detail {

class Deadline {
 public:
  explicit Deadline(std::optional<std::chrono::duration<double>> budget)
      : start_(std::chrono::steady_clock::now()) {
    if (budget) {
      end_ = start_ + std::chrono::duration_cast<std::chrono::steady_clock::duration>(*budget);
    }
  }

  // Polls the clock every 1024 calls.
  bool expired() {
    if (!end_) return false;
    if (expired_) return true;
    if ((++polls_ & 1023u) != 0) return false;
    expired_ = std::chrono::steady_clock::now() >= *end_;
    return expired_;
  }

  std::chrono::nanoseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start_);
  }

 private:
  std::chrono::steady_clock::time_point start_;
  std::optional<std::chrono::steady_clock::time_point> end_;
  std::uint64_t polls_ = 0;
  bool expired_ = false;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::size_t w = 0; w < s.word_count(); ++w) {
      h ^= s.word(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// Exact cover of a vertex set by blocks produced on demand.
///
/// `for_each_block(v, uncovered, visit)` must call visit(block) for every
/// admissible block containing v inside `uncovered`, stopping when visit
/// returns false. Branching is on the uncovered vertex with fewest blocks,
/// ties by label. Uncovered sets proven infeasible are memoised.
class ExactCover {
 public:
  using Visit = std::function<bool(const std::vector<Vertex>&)>;
  using BlockSource = std::function<void(Vertex, const VertexSet&, const Visit&)>;
  // Returns true when the uncovered set provably has no exact cover.
  using Refuter = std::function<bool(const VertexSet&)>;

  enum class Result { kFound, kExhausted, kTimedOut };

  ExactCover(BlockSource source, Deadline& deadline, bool reverse, Refuter refuter = {})
      : source_(std::move(source)), refuter_(std::move(refuter)), deadline_(deadline), reverse_(reverse) {}

  Result solve(const VertexSet& uncovered) {
    chosen_.clear();
    const bool found = descend(uncovered);
    if (found) return Result::kFound;
    return timed_out_ ? Result::kTimedOut : Result::kExhausted;
  }

  const std::vector<std::vector<Vertex>>& blocks() const { return chosen_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  static constexpr std::size_t kMemoLimit = 1u << 22;

  std::size_t count_blocks(Vertex v, const VertexSet& uncovered, std::size_t limit) {
    std::size_t count = 0;
    source_(v, uncovered, [&](const std::vector<Vertex>&) { return ++count <= limit; });
    return count;
  }

  bool descend(const VertexSet& uncovered) {
    ++nodes_;
    if (uncovered.empty()) return true;
    if (deadline_.expired()) {
      timed_out_ = true;
      return false;
    }
    if (failed_.contains(uncovered)) return false;
    if (refuter_ && refuter_(uncovered)) return false;

    // Fail-first: pick the vertex with the fewest admissible blocks.
    std::vector<Vertex> members = uncovered.to_vector();
    if (reverse_) std::reverse(members.begin(), members.end());
    std::size_t best_count = SIZE_MAX;
    Vertex pivot = members.front();
    for (Vertex v : members) {
      const std::size_t c = count_blocks(v, uncovered, best_count == SIZE_MAX ? SIZE_MAX - 1 : best_count);
      if (c < best_count) {
        best_count = c;
        pivot = v;
        if (c == 0) break;
      }
    }
    if (best_count > 0) {
      std::vector<std::vector<Vertex>> options;
      source_(pivot, uncovered, [&](const std::vector<Vertex>& b) {
        options.push_back(b);
        return true;
      });
      if (reverse_) std::reverse(options.begin(), options.end());
      for (const auto& block : options) {
        VertexSet rest = uncovered;
        for (Vertex v : block) rest.erase(v);
        chosen_.push_back(block);
        if (descend(rest)) return true;
        chosen_.pop_back();
        if (timed_out_) return false;
      }
    }
    if (failed_.size() < kMemoLimit) failed_.insert(uncovered);
    return false;
  }

  BlockSource source_;
  Refuter refuter_;
  Deadline& deadline_;
  bool reverse_;
  bool timed_out_ = false;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<Vertex>> chosen_;
  std::unordered_set<VertexSet, VertexSetHash> failed_;
};

}  // namespace orient::detail
