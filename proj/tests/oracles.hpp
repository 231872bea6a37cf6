#pragma once

// Slow reference implementations. They share nothing with the library
// beyond OrientedGraph itself, and work on plain adjacency matrices.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "orient/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const orient::OrientedGraph& g) {
  const std::size_t n = g.order();
  Matrix m(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) m[u][v] = true;
  return m;
}

inline orient::OrientedGraph graph_of(const Matrix& m) {
  std::vector<orient::Edge> edges;
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[u][v]) edges.emplace_back(static_cast<orient::Vertex>(u), static_cast<orient::Vertex>(v));
  return orient::OrientedGraph(m.size(), edges);
}

// Each pair is absent with probability `absent`, otherwise oriented by a
// fair coin.
inline orient::OrientedGraph random_graph(std::size_t n, double absent, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<orient::Edge> edges;
  for (orient::Vertex i = 0; i < n; ++i)
    for (orient::Vertex j = i + 1; j < n; ++j) {
      if (unit(rng) < absent) continue;
      if (rng() & 1) edges.emplace_back(i, j);
      else edges.emplace_back(j, i);
    }
  return orient::OrientedGraph(n, edges);
}

inline orient::OrientedGraph random_tournament(std::size_t n, std::mt19937_64& rng) {
  return random_graph(n, 0.0, rng);
}

// Labelled tournament number `code` on n vertices: bit p of code orients
// the p-th pair (i<j, lexicographic) as j -> i.
inline Matrix tournament_from_code(std::size_t n, std::uint64_t code) {
  Matrix m(n, std::vector<bool>(n, false));
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++p) {
      if ((code >> p) & 1) m[j][i] = true;
      else m[i][j] = true;
    }
  return m;
}

inline std::uint64_t code_of(const Matrix& m) {
  std::uint64_t code = 0;
  std::size_t p = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j, ++p)
      if (m[j][i]) code |= std::uint64_t{1} << p;
  return code;
}

// Isomorphism classes of tournaments on n <= 6 vertices, counted by marking
// the full orbit of each unvisited labelled tournament. Returns one matrix
// per class.
inline std::vector<Matrix> tournament_classes(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  std::vector<bool> seen(total, false);
  std::vector<Matrix> reps;
  std::vector<std::size_t> perm(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    if (seen[code]) continue;
    const Matrix m = tournament_from_code(n, code);
    reps.push_back(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Matrix image(n, std::vector<bool>(n, false));
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
          if (m[u][v]) image[perm[u]][perm[v]] = true;
      seen[code_of(image)] = true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return reps;
}

inline bool is_transitive_set(const Matrix& m, const std::vector<std::size_t>& s) {
  // A tournament is transitive iff its out-degrees are pairwise distinct.
  std::vector<bool> used(s.size(), false);
  for (std::size_t a : s) {
    std::size_t d = 0;
    for (std::size_t b : s) {
      if (a == b) continue;
      if (!m[a][b] && !m[b][a]) return false;
      if (m[a][b]) ++d;
    }
    if (used[d]) return false;
    used[d] = true;
  }
  return true;
}

inline bool contains_transitive(const Matrix& m, std::size_t k) {
  const std::size_t n = m.size();
  if (k == 0) return true;
  if (k > n) return false;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < n; ++v)
      if (pick[v]) s.push_back(v);
    if (is_transitive_set(m, s)) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

// v_0 is fixed at 0; every cyclic ordering is a rotation of one that
// starts there.
inline bool square_hamiltonian(const Matrix& m) {
  const std::size_t n = m.size();
  if (n < 3) return false;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      ok = m[p[i]][p[(i + 1) % n]] && m[p[i]][p[(i + 2) % n]];
    if (ok) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return false;
}

inline bool packable_from(const Matrix& m, std::size_t k, std::vector<bool>& used) {
  const std::size_t n = m.size();
  std::size_t first = 0;
  while (first < n && used[first]) ++first;
  if (first == n) return true;
  std::vector<std::size_t> rest;
  for (std::size_t v = first + 1; v < n; ++v)
    if (!used[v]) rest.push_back(v);
  if (rest.size() + 1 < k) return false;
  std::vector<bool> pick(rest.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k - 1), true);
  do {
    std::vector<std::size_t> block{first};
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (pick[i]) block.push_back(rest[i]);
    if (!is_transitive_set(m, block)) continue;
    for (std::size_t v : block) used[v] = true;
    const bool ok = packable_from(m, k, used);
    for (std::size_t v : block) used[v] = false;
    if (ok) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

inline bool perfectly_packable(const Matrix& m, std::size_t k) {
  if (k == 0 || m.size() % k != 0) return false;
  std::vector<bool> used(m.size(), false);
  return packable_from(m, k, used);
}

// Direct transcription of the digraph6 layout: '&', N(n), then the
// row-major adjacency matrix in 6-bit groups, high bit first, plus 63.
inline std::string digraph6(const Matrix& m) {
  const std::size_t n = m.size();
  std::string s = "&";
  if (n <= 62) {
    s += static_cast<char>(n + 63);
  } else {
    s += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) s += static_cast<char>(((n >> shift) & 63) + 63);
  }
  std::vector<int> bits;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bits.push_back(m[i][j] ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int x = 0;
    for (std::size_t b = 0; b < 6; ++b) x = (x << 1) | bits[i + b];
    s += static_cast<char>(x + 63);
  }
  return s;
}

}  // namespace oracle
