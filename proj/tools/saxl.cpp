// Command-line front end: single-group reports, manifest suites, catalog.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "saxl/base_engine.hpp"
#include "saxl/constructions.hpp"
#include "saxl/error.hpp"
#include "saxl/report.hpp"

namespace {

using saxl::ExitStatus;

int code(ExitStatus s) { return static_cast<int>(s); }

void emit(const saxl::Json& doc, const std::string& out_path) {
  std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw saxl::Error(saxl::Errc::IoError, "cannot write " + out_path);
  out << text;
}

int run_group(const std::string& spec, const std::string& checks, const std::string& out_path,
              const std::string& edges_out, std::size_t max_edges, double time_budget,
              bool timings) {
  saxl::ReportConfig cfg;
  if (!checks.empty()) saxl::parse_checks(checks, cfg);
  cfg.search.max_edges = max_edges;
  if (time_budget > 0) cfg.search.time_budget = std::chrono::duration<double>(time_budget);
  cfg.timings = timings;
  cfg.keep_edges = !edges_out.empty();
  auto result = saxl::run_report(spec, cfg);
  emit(result.report, out_path);
  if (!edges_out.empty() && result.edges) {
    std::ofstream out(edges_out);
    if (!out) throw saxl::Error(saxl::Errc::IoError, "cannot write " + edges_out);
    saxl::write_edge_dump(out, *result.edges);
  }
  if (result.invariant_failure) return code(ExitStatus::ExpectationFailed);
  if (result.budget_exhausted) return code(ExitStatus::BudgetExhausted);
  return code(ExitStatus::Ok);
}

int run_suite(const std::string& manifest, const std::string& out_path, std::size_t workers) {
  auto result = saxl::run_suite_file(manifest, workers);
  emit(result.summary, out_path);
  for (const auto& row : result.summary["table"]) {
    std::cerr << (row["pass"].get<bool>() ? "PASS " : "FAIL ") << row["spec"].get<std::string>()
              << '\n';
  }
  std::cerr << result.summary["passed"] << '/' << result.summary["groups"] << " passed\n";
  return code(result.status);
}

int run_catalog() {
  for (const auto& entry : saxl::catalog_entries()) {
    std::cout << entry.name << "\tdegree " << entry.degree << "\torder " << entry.order;
    const auto& tags = entry.tags;
    if (!tags.empty()) {
      std::cout << "\ttags";
      for (const auto& t : tags) std::cout << ' ' << t;
    }
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Saxl hypergraphs of permutation groups"};
  app.require_subcommand(1);

  std::string spec, checks, out_path, edges_out, manifest;
  std::size_t max_edges = saxl::BaseSearchConfig{}.max_edges;
  double time_budget = 0;
  bool timings = false;
  std::size_t workers = 0;

  auto* group = app.add_subcommand("group", "Report on one group");
  group->add_option("spec", spec, "Group spec, e.g. PGL2:7, AFFDEL:5:1, CAT:M11")->required();
  group->add_option("--checks", checks, "cnc,edcnc,complete,gossip=N,flagtour,valency,rays,invariants");
  group->add_option("--out", out_path, "Write the JSON report here instead of stdout");
  group->add_option("--edges-out", edges_out, "Write the edge set as an edge dump");
  group->add_option("--max-edges", max_edges, "Edge enumeration budget");
  group->add_option("--time-budget", time_budget, "Wall-clock budget in seconds");
  group->add_flag("--timings", timings, "Include per-check timings in the report");

  auto* suite = app.add_subcommand("suite", "Run a manifest of groups with expectations");
  suite->add_option("manifest", manifest, "Manifest JSON file")->required();
  suite->add_option("--out", out_path, "Write the suite JSON here instead of stdout");
  suite->add_option("--workers", workers, "Parallel workers (default: hardware threads)");

  auto* catalog = app.add_subcommand("catalog", "List the named groups");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : code(ExitStatus::InputError);
  }

  try {
    if (*group) return run_group(spec, checks, out_path, edges_out, max_edges, time_budget, timings);
    if (*suite) return run_suite(manifest, out_path, workers);
    if (*catalog) return run_catalog();
  } catch (const saxl::Error& e) {
    std::cerr << "saxl: " << e.what() << '\n';
    return code(saxl::exit_status_for(e.code()));
  } catch (const std::exception& e) {
    std::cerr << "saxl: " << e.what() << '\n';
    return code(ExitStatus::InputError);
  }
  return code(ExitStatus::InputError);
}
