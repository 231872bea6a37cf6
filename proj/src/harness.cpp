#include "orient/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "orient/deciders.hpp"
#include "orient/errors.hpp"

namespace orient {

using nlohmann::json;

OrientedGraph random_oriented_graph(std::size_t n, std::size_t min_semidegree, std::uint64_t seed,
                                    const SamplerOptions& options) {
  const std::size_t ceiling = n == 0 ? 0 : (n - 1) / 2;
  if (min_semidegree > ceiling) {
    throw PreconditionError("minimum semidegree " + std::to_string(min_semidegree) +
                            " is impossible for an oriented graph on " + std::to_string(n) +
                            " vertices (at most " + std::to_string(ceiling) + ")");
  }
  if (options.delete_prob < 0.0 || options.delete_prob >= 1.0) {
    throw PreconditionError("edge deletion probability must lie in [0, 1)");
  }
  std::mt19937_64 rng(seed);
  // Thresholds on raw 64-bit draws keep the stream identical across
  // standard library implementations.
  const auto delete_cut = static_cast<std::uint64_t>(options.delete_prob * 18446744073709551616.0);
  std::vector<std::size_t> out(n);
  std::vector<std::size_t> in(n);
  std::vector<Edge> edges;
  for (std::uint64_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    edges.clear();
    std::fill(out.begin(), out.end(), 0);
    std::fill(in.begin(), in.end(), 0);
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) {
        const bool forward = (rng() >> 63) != 0;
        if (delete_cut != 0 && rng() < delete_cut) continue;
        const Edge e = forward ? Edge{i, j} : Edge{j, i};
        ++out[e.first];
        ++in[e.second];
        edges.push_back(e);
      }
    }
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) ok = out[v] >= min_semidegree && in[v] >= min_semidegree;
    if (ok) return OrientedGraph(n, edges);
  }
  throw PreconditionError("no graph with minimum semidegree " + std::to_string(min_semidegree) + " found in " +
                          std::to_string(options.max_attempts) + " attempts");
}

std::optional<Conjecture> parse_conjecture(std::string_view name) {
  if (name == "posa") return Conjecture::kPosa;
  if (name == "t3-packing") return Conjecture::kT3Packing;
  return std::nullopt;
}

std::string_view conjecture_name(Conjecture c) {
  return c == Conjecture::kPosa ? "posa" : "t3-packing";
}

std::size_t conjecture_threshold(Conjecture c, std::size_t n) {
  return c == Conjecture::kPosa ? (5 * n + 11) / 12 : (7 * n + 17) / 18;
}

std::string input_hash(const OrientedGraph& g) {
  const std::string bytes = g.order() <= kDefaultCanonicalMaxOrder ? canonical_form(g) : encode_digraph6(g);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

namespace {

void strip_timing(json& j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    j.erase("determinism_hash");
    for (auto& [key, value] : j.items()) strip_timing(value);
  } else if (j.is_array()) {
    for (auto& value : j) strip_timing(value);
  }
}

double millis(std::chrono::nanoseconds d) { return std::chrono::duration<double, std::milli>(d).count(); }

struct TrialResult {
  json record;
  Verdict verdict = Verdict::kNo;
  bool contradiction = false;
  std::optional<std::string> finding;
};

// Runs the conjecture's decider; returns the verdict and fills `record`.
Verdict decide(Conjecture c, const OrientedGraph& g, const DeciderOptions& options, json& record) {
  if (c == Conjecture::kPosa) {
    auto outcome = square_hamilton(g, options);
    record["nodes"] = outcome.nodes_explored;
    record["elapsed_ms"] = millis(outcome.elapsed);
    if (outcome.certificate) {
      if (!validate_square_certificate(g, *outcome.certificate)) {
        throw StageFailure("square_hamilton returned a certificate that does not validate");
      }
      record["certificate"] = {{"ordering", outcome.certificate->ordering}};
    }
    return outcome.verdict;
  }
  auto outcome = decide_perfect_t_packing(g, 3, options);
  record["nodes"] = outcome.nodes_explored;
  record["elapsed_ms"] = millis(outcome.elapsed);
  if (outcome.certificate) {
    if (!validate_packing(g, *outcome.certificate, 3)) {
      throw StageFailure("perfect_t_packing returned a packing that does not validate");
    }
    json blocks = json::array();
    for (const auto& b : outcome.certificate->blocks) blocks.push_back(b.order);
    record["certificate"] = {{"blocks", blocks}};
  }
  return outcome.verdict;
}

TrialResult run_trial(const SearchConfig& cfg, std::size_t threshold, std::size_t trial) {
  TrialResult result;
  const std::uint64_t seed = cfg.seed ^ static_cast<std::uint64_t>(trial);
  const OrientedGraph g = random_oriented_graph(cfg.n, threshold, seed, SamplerOptions{cfg.delete_prob});
  json& r = result.record;
  r["trial"] = trial;
  r["seed"] = seed;
  r["graph"] = encode_digraph6(g);
  r["input_hash"] = input_hash(g);
  r["min_semidegree"] = degrees(g).delta_zero;

  DeciderOptions first;
  first.budget = cfg.budget_per_trial;
  result.verdict = decide(cfg.conjecture, g, first, r);
  r["verdict"] = verdict_name(result.verdict);

  if (result.verdict == Verdict::kNo) {
    DeciderOptions second = first;
    second.reverse_order = true;
    json check;
    const Verdict again = decide(cfg.conjecture, g, second, check);
    json reverify = {{"verdict", verdict_name(again)}, {"nodes", check["nodes"]}, {"elapsed_ms", check["elapsed_ms"]}};
    if (again == Verdict::kYes) {
      result.contradiction = true;
      reverify["certificate"] = check["certificate"];
    }
    r["reverification"] = reverify;
    r["confirmed"] = again == Verdict::kNo;
    if (again == Verdict::kNo) result.finding = r["graph"].get<std::string>();
  }
  return result;
}

}  // namespace

std::string determinism_hash(const json& report) {
  json copy = report;
  strip_timing(copy);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(copy.dump())));
  return buf;
}

json conjecture_search(const SearchConfig& cfg) {
  const auto started = std::chrono::steady_clock::now();
  const std::size_t floor_threshold = conjecture_threshold(cfg.conjecture, cfg.n);
  const std::size_t threshold = cfg.min_semidegree.value_or(floor_threshold);
  if (threshold < floor_threshold) {
    throw PreconditionError("minimum semidegree " + std::to_string(threshold) + " is below the conjecture's threshold " +
                            std::to_string(floor_threshold));
  }
  if (cfg.conjecture == Conjecture::kT3Packing && cfg.n % 3 != 0) {
    throw PreconditionError("t3-packing search needs n divisible by 3");
  }
  if (cfg.trials > 0 && threshold > (cfg.n == 0 ? 0 : (cfg.n - 1) / 2)) {
    throw PreconditionError("minimum semidegree " + std::to_string(threshold) + " is impossible at n = " +
                            std::to_string(cfg.n));
  }

  std::vector<TrialResult> results(cfg.trials);
  std::size_t workers = cfg.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.workers;
  workers = std::min(workers, std::max<std::size_t>(cfg.trials, 1));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](std::size_t id) {
    try {
      for (std::size_t t = next++; t < cfg.trials; t = next++) results[t] = run_trial(cfg, threshold, t);
    } catch (...) {
      errors[id] = std::current_exception();
      next = cfg.trials;
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t id = 1; id < workers; ++id) pool.emplace_back(work, id);
  work(0);
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  json report;
  report["command"] = cfg.command;
  report["conjecture"] = conjecture_name(cfg.conjecture);
  report["n"] = cfg.n;
  report["min_semidegree"] = threshold;
  report["trials"] = cfg.trials;
  report["seed"] = cfg.seed;
  report["delete_prob"] = cfg.delete_prob;
  report["budget_seconds"] = cfg.budget_per_trial ? json(cfg.budget_per_trial->count()) : json(nullptr);

  std::size_t yes = 0, no = 0, timeout = 0, contradictions = 0;
  json trials = json::array();
  json findings = json::array();
  for (auto& r : results) {
    yes += r.verdict == Verdict::kYes;
    no += r.verdict == Verdict::kNo;
    timeout += r.verdict == Verdict::kTimeout;
    contradictions += r.contradiction;
    if (r.finding) findings.push_back(*r.finding);
    trials.push_back(std::move(r.record));
  }
  report["counts"] = {{"yes", yes}, {"no", no}, {"timeout", timeout}};
  report["contradictions"] = contradictions;
  report["results"] = std::move(trials);
  report["findings"] = findings;

  if (cfg.findings_dir && !findings.empty()) {
    std::filesystem::create_directories(*cfg.findings_dir);
    for (const auto& f : findings) {
      const std::string bytes = f.get<std::string>();
      const auto path = std::filesystem::path(*cfg.findings_dir) / (input_hash(decode_digraph6(bytes)) + ".d6");
      std::ofstream(path) << bytes << '\n';
    }
  }

  report["determinism_hash"] = determinism_hash(report);
  report["elapsed_ms"] = millis(std::chrono::steady_clock::now() - started);
  return report;
}

}  // namespace orient
