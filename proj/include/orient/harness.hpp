#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "orient/graph.hpp"

namespace orient {

struct SamplerOptions {
  /// Each tournament edge is deleted independently with this probability.
  double delete_prob = 0.0;
  std::uint64_t max_attempts = 5'000'000;
};

/// Random oriented graph with minimum semidegree >= min_semidegree, drawn
/// by rejection from uniform random tournaments (optionally thinned).
/// Deterministic in `seed`. Throws PreconditionError when the threshold
/// exceeds floor((n-1)/2) or the attempt budget runs out.
OrientedGraph random_oriented_graph(std::size_t n, std::size_t min_semidegree, std::uint64_t seed,
                                    const SamplerOptions& options = {});

enum class Conjecture { kPosa, kT3Packing };

std::optional<Conjecture> parse_conjecture(std::string_view name);
std::string_view conjecture_name(Conjecture c);

/// Smallest minimum semidegree covered by the conjecture at order n:
/// ceil(5n/12) for posa, ceil(7n/18) for t3-packing.
std::size_t conjecture_threshold(Conjecture c, std::size_t n);

struct SearchConfig {
  Conjecture conjecture = Conjecture::kPosa;
  std::size_t n = 0;
  /// Defaults to conjecture_threshold when unset.
  std::optional<std::size_t> min_semidegree;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<std::chrono::duration<double>> budget_per_trial;
  double delete_prob = 0.0;
  /// 0 means one worker per hardware thread.
  std::size_t workers = 0;
  /// Graphs with a confirmed "no" are written here when set.
  std::optional<std::string> findings_dir;
  std::vector<std::string> command;
};

/// Samples `trials` graphs and runs the matching decider on each. A "no"
/// is re-run from scratch with reversed candidate order before it is
/// reported. The returned JSON report carries a determinism hash over
/// every field except timings.
nlohmann::json conjecture_search(const SearchConfig& cfg);

/// Hash of a report with all "elapsed_ms" fields and the hash itself removed.
std::string determinism_hash(const nlohmann::json& report);

/// Stable identifier: FNV-1a of the canonical form for small orders,
/// otherwise of the labelled digraph6 bytes.
std::string input_hash(const OrientedGraph& g);

}  // namespace orient
