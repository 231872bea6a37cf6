#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "orient/errors.hpp"

namespace orient {

using Vertex = std::uint32_t;

/// Fixed-capacity bit row over the vertices 0..size()-1.
///
/// Storage is inline so that copies in search hot paths never allocate.
/// All binary operations require both operands to have the same size.
class VertexSet {
 public:
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kMaxWords = 8;
  static constexpr std::size_t kMaxVertices = kWordBits * kMaxWords;

  VertexSet() = default;

  explicit VertexSet(std::size_t n) : n_(n), nwords_((n + kWordBits - 1) / kWordBits) {
    if (n > kMaxVertices) {
      throw PreconditionError("vertex count exceeds supported maximum of " +
                              std::to_string(kMaxVertices));
    }
  }

  static VertexSet full(std::size_t n) {
    VertexSet s(n);
    for (std::size_t w = 0; w < s.nwords_; ++w) s.words_[w] = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static VertexSet of(std::size_t n, const std::vector<Vertex>& vs) {
    VertexSet s(n);
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  std::size_t size() const { return n_; }

  void insert(Vertex v) { words_[v / kWordBits] |= bit(v); }
  void erase(Vertex v) { words_[v / kWordBits] &= ~bit(v); }
  bool contains(Vertex v) const { return v < n_ && (words_[v / kWordBits] & bit(v)) != 0; }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < nwords_; ++w) c += std::popcount(words_[w]);
    return c;
  }

  std::size_t count_and(const VertexSet& o) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < nwords_; ++w) c += std::popcount(words_[w] & o.words_[w]);
    return c;
  }

  bool empty() const {
    for (std::size_t w = 0; w < nwords_; ++w)
      if (words_[w] != 0) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t w = 0; w < nwords_; ++w)
      if ((words_[w] & o.words_[w]) != 0) return true;
    return false;
  }

  bool subset_of(const VertexSet& o) const {
    for (std::size_t w = 0; w < nwords_; ++w)
      if ((words_[w] & ~o.words_[w]) != 0) return false;
    return true;
  }

  // Smallest member >= from, or size() if none.
  Vertex next(Vertex from) const {
    std::size_t w = from / kWordBits;
    if (w >= nwords_) return static_cast<Vertex>(n_);
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from % kWordBits));
    while (true) {
      if (word != 0) return static_cast<Vertex>(w * kWordBits + std::countr_zero(word));
      if (++w >= nwords_) return static_cast<Vertex>(n_);
      word = words_[w];
    }
  }

  Vertex first() const { return next(0); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < nwords_; ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        f(static_cast<Vertex>(w * kWordBits + std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t w = 0; w < nwords_; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t w = 0; w < nwords_; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t w = 0; w < nwords_; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t w = 0; w < a.nwords_; ++w)
      if (a.words_[w] != b.words_[w]) return false;
    return true;
  }

  std::uint64_t word(std::size_t w) const { return words_[w]; }
  std::size_t word_count() const { return nwords_; }

 private:
  static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v % kWordBits); }

  void trim() {
    if (n_ % kWordBits != 0) words_[nwords_ - 1] &= (std::uint64_t{1} << (n_ % kWordBits)) - 1;
  }

  std::size_t n_ = 0;
  std::size_t nwords_ = 0;
  std::array<std::uint64_t, kMaxWords> words_{};
};

}  // namespace orient
