#include "orient/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "orient/constructions.hpp"
#include "orient/deciders.hpp"
#include "orient/errors.hpp"
#include "orient/harness.hpp"
#include "orient/packing.hpp"
#include "orient/ramsey.hpp"

namespace orient {

using nlohmann::json;

namespace {

OrientedGraph read_graph(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::getline(in, text);
  } else {
    std::ifstream file(path);
    if (!file) throw PreconditionError("cannot open graph file " + path);
    std::getline(file, text);
  }
  while (!text.empty() && (text.back() == '\r' || text.back() == ' ')) text.pop_back();
  return decode_digraph6(text);
}

json parts_json(const PartLabeling& parts) {
  json j = json::object();
  for (const auto& [name, members] : parts.parts()) j[name] = members;
  return {{"parts", j}};
}

json packing_json(const TkPacking& p) {
  json blocks = json::array();
  for (const auto& b : p.blocks) blocks.push_back(b.order);
  return {{"blocks", blocks}};
}

double millis(std::chrono::nanoseconds d) { return std::chrono::duration<double, std::milli>(d).count(); }

std::optional<std::chrono::duration<double>> budget_from(double seconds) {
  if (seconds <= 0) return std::nullopt;
  return std::chrono::duration<double>(seconds);
}

RamseyTable default_table() {
  RamseyTable table;
  const std::filesystem::path literature = std::filesystem::path(ORIENT_DATA_DIR) / "ramsey_table.json";
  if (std::filesystem::exists(literature)) table = RamseyTable::load(literature.string());
  table.merge(computed_table());
  table.validate();
  return table;
}

RamseyTable table_from(const std::string& path) {
  if (path.empty()) return default_table();
  RamseyTable table = RamseyTable::load(path);
  const auto problems = verify_computed_entries(table);
  if (!problems.empty()) throw PreconditionError("Ramsey table " + path + ": " + problems.front());
  return table;
}

json ramsey_json(const RamseyResult& r, std::string_view kind) {
  json j = {{"kind", kind},
            {"k", r.k},
            {"value", r.value},
            {"status", status_name(r.status)},
            {"witness_digraph6", r.witness ? json(encode_digraph6(*r.witness)) : json(nullptr)}};
  if (r.doubling) {
    j["doubling"] = {{"k", r.doubling->k}, {"order", r.doubling->order}, {"sub_value", r.doubling->sub_value}};
  }
  return j;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal oriented graphs, embedding deciders, packings and oriented Ramsey numbers"};
  app.name("orient");
  app.require_subcommand(1);

  std::string family;
  std::size_t size = 0;
  std::string out_path;
  auto* construct = app.add_subcommand("construct", "Emit an extremal construction as digraph6 plus its parts");
  construct->add_option("--family", family, "Construction family")
      ->required()
      ->check(CLI::IsMember({"posa-extremal", "t3-extremal", "yuster-extremal", "cyclic-blowup", "regular-tournament",
                             "near-regular-tournament"}));
  construct->add_option("--n", size, "Order (m for yuster-extremal, q for tournaments)")->required();
  construct->add_option("--out", out_path, "Also write PATH and PATH.parts.json");

  std::string graph_path;
  auto* degrees_cmd = app.add_subcommand("degrees", "Degree summary of a digraph6 graph");
  degrees_cmd->add_option("path", graph_path, "digraph6 file, - for stdin")->required();

  std::string property;
  std::size_t k = 0;
  double budget_seconds = 0;
  auto* check = app.add_subcommand("check", "Decide an embedding property exactly");
  check->add_option("property", property)->required()->check(CLI::IsMember({"square-hamilton", "t-packing", "contains-t"}));
  check->add_option("path", graph_path, "digraph6 file, - for stdin")->required();
  check->add_option("--k", k, "Transitive tournament order");
  check->add_option("--budget", budget_seconds, "Time budget in seconds (default: none)");

  std::string algorithm;
  std::string table_path;
  auto* pack = app.add_subcommand("pack", "Build a perfect transitive packing");
  pack->add_option("algorithm", algorithm)->required()->check(CLI::IsMember({"caro", "hs"}));
  pack->add_option("path", graph_path, "digraph6 file, - for stdin")->required();
  pack->add_option("--k", k)->required();
  pack->add_option("--table", table_path, "Ramsey table JSON");

  std::string which;
  std::size_t ceiling = kDefaultEnumerationCeiling;
  auto* ramsey = app.add_subcommand("ramsey", "Compute an oriented or tiling Ramsey number");
  ramsey->add_option("which", which)->required()->check(CLI::IsMember({"oriented", "tiling"}));
  ramsey->add_option("--k", k)->required();
  ramsey->add_option("--ceiling", ceiling, "Largest enumerated order")->check(CLI::Range(1, 8));

  std::string conjecture;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double delete_prob = 0.0;
  std::size_t min_semidegree = 0;
  std::size_t workers = 0;
  std::string findings_dir;
  auto* search = app.add_subcommand("search", "Seeded counterexample search");
  search->add_option("--conjecture", conjecture)->required()->check(CLI::IsMember({"posa", "t3-packing"}));
  search->add_option("--n", size)->required();
  search->add_option("--trials", trials)->required();
  search->add_option("--seed", seed)->required();
  search->add_option("--budget", budget_seconds, "Per-trial budget in seconds");
  search->add_option("--delete-prob", delete_prob)->check(CLI::Range(0.0, 0.999999));
  auto* min_opt = search->add_option("--min-semidegree", min_semidegree, "Defaults to the conjecture threshold");
  search->add_option("--workers", workers, "Worker threads (default: hardware)");
  search->add_option("--findings", findings_dir, "Directory for confirmed counterexamples");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) {
      const Construction c = orient::construct(*parse_family(family), size);
      const std::string d6 = encode_digraph6(c.graph);
      const json sidecar = parts_json(c.parts);
      if (!out_path.empty()) {
        std::ofstream(out_path) << d6 << '\n';
        std::ofstream(out_path + ".parts.json") << sidecar.dump() << '\n';
      }
      out << d6 << '\n' << sidecar.dump() << '\n';
      return kExitOk;
    }
    if (degrees_cmd->parsed()) {
      const OrientedGraph g = read_graph(graph_path, in);
      const DegreeSummary d = degrees(g);
      out << json{{"n", g.order()},
                  {"edges", g.edge_count()},
                  {"delta_plus", d.delta_plus},
                  {"delta_minus", d.delta_minus},
                  {"delta_zero", d.delta_zero},
                  {"delta_total", d.delta_total},
                  {"tournament", g.is_tournament()}}
                 .dump()
          << '\n';
      return kExitOk;
    }
    if (check->parsed()) {
      const OrientedGraph g = read_graph(graph_path, in);
      DeciderOptions options;
      options.budget = budget_from(budget_seconds);
      json result = {{"property", property}, {"n", g.order()}};
      if (property == "square-hamilton") {
        const auto outcome = square_hamilton(g, options);
        result["verdict"] = verdict_name(outcome.verdict);
        result["nodes"] = outcome.nodes_explored;
        result["elapsed_ms"] = millis(outcome.elapsed);
        if (outcome.certificate) {
          if (!validate_square_certificate(g, *outcome.certificate)) throw StageFailure("certificate does not validate");
          result["certificate"] = {{"ordering", outcome.certificate->ordering}};
        }
      } else if (property == "t-packing") {
        if (k == 0) throw PreconditionError("t-packing needs --k >= 1");
        result["k"] = k;
        const auto outcome = decide_perfect_t_packing(g, k, options);
        result["verdict"] = verdict_name(outcome.verdict);
        result["nodes"] = outcome.nodes_explored;
        result["elapsed_ms"] = millis(outcome.elapsed);
        if (outcome.certificate) {
          if (!validate_packing(g, *outcome.certificate, k)) throw StageFailure("packing does not validate");
          result["certificate"] = packing_json(*outcome.certificate);
        }
      } else {
        if (k == 0) throw PreconditionError("contains-t needs --k >= 1");
        result["k"] = k;
        const auto witness = contains_transitive(g, k);
        result["verdict"] = witness ? "yes" : "no";
        if (witness) result["witness"] = witness->order;
      }
      out << result.dump() << '\n';
      return kExitOk;
    }
    if (pack->parsed()) {
      const OrientedGraph g = read_graph(graph_path, in);
      const RamseyTable table = table_from(table_path);
      json result = {{"algorithm", algorithm}, {"k", k}, {"n", g.order()}};
      if (algorithm == "caro") {
        CaroTrace trace;
        const TkPacking p = caro_pack(g, k, table, &trace);
        result["certificate"] = packing_json(p);
        result["valid"] = validate_packing(g, p, k);
        result["stages"] = {{"reserved_copies", trace.reserved_copies},
                            {"reserved_vertices", trace.reserved_vertices},
                            {"uncovered_after_fill", trace.uncovered_after_fill},
                            {"direct_pairing", trace.direct_pairing}};
      } else {
        HsTrace trace;
        const TkPacking p = hs_pack(g, k, table, &trace);
        result["certificate"] = packing_json(p);
        result["valid"] = validate_packing(g, p, k);
        result["stages"] = {{"adjustment_blocks", trace.adjustment_blocks},
                            {"residual_order", trace.residual_order},
                            {"clique_blocks", trace.clique_blocks}};
      }
      out << result.dump() << '\n';
      return kExitOk;
    }
    if (ramsey->parsed()) {
      const RamseyResult r = which == "oriented" ? oriented_ramsey(k, ceiling) : tiling_ramsey(k, ceiling);
      out << ramsey_json(r, which).dump() << '\n';
      return kExitOk;
    }
    if (search->parsed()) {
      SearchConfig cfg;
      cfg.conjecture = *parse_conjecture(conjecture);
      cfg.n = size;
      if (min_opt->count() > 0) cfg.min_semidegree = min_semidegree;
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.budget_per_trial = budget_from(budget_seconds);
      cfg.delete_prob = delete_prob;
      cfg.workers = workers;
      if (!findings_dir.empty()) cfg.findings_dir = findings_dir;
      cfg.command = args;
      const json report = conjecture_search(cfg);
      out << report.dump() << '\n';
      return report["contradictions"].get<std::size_t>() == 0 ? kExitOk : kExitStageFailure;
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const StageFailure& e) {
    err << "internal failure: " << e.what() << '\n';
    return kExitStageFailure;
  } catch (const std::exception& e) {
    err << "internal failure: " << e.what() << '\n';
    return kExitStageFailure;
  }
  return kExitUsage;
}

}  // namespace orient
