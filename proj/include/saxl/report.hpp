#ifndef SAXL_REPORT_HPP
#define SAXL_REPORT_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "saxl/base_engine.hpp"

namespace saxl {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

struct ReportConfig {
  bool cnc = true;
  bool edcnc = true;
  bool complete = true;
  bool valency = true;
  bool flagtour = true;
  std::optional<std::size_t> gossip = 3;  // n_max, or off
  bool rays = false;
  bool invariants = false;
  BaseSearchConfig search;
  /// Wall-clock timings make reports run-dependent, so they are opt-in.
  bool timings = false;
  /// Keep the edge set in ReportResult::edges.
  bool keep_edges = false;
};

/// Comma-separated check list: cnc, edcnc, complete, gossip=N, flagtour,
/// valency, rays, invariants, or "all" for the default set. Throws ParseError.
void parse_checks(std::string_view text, ReportConfig& cfg);

struct ReportResult {
  Json report;
  bool budget_exhausted = false;
  /// A check contradicted a proven statement or an internal cross-check.
  bool invariant_failure = false;
  std::optional<EdgeDump> edges;
};

/// Builds the group and runs the requested checks in dependency order.
/// Failures inside a check are recorded under "errors" and leave that
/// check's fields null or "unknown"; spec and construction errors throw.
ReportResult run_report(std::string_view spec, const ReportConfig& cfg = {});

/// Exit statuses shared by the CLI and the suite runner.
enum class ExitStatus { Ok = 0, ExpectationFailed = 1, BudgetExhausted = 2, InputError = 3 };

ExitStatus exit_status_for(Errc code);

struct SuiteResult {
  Json summary;
  ExitStatus status = ExitStatus::Ok;
};

/// Manifest: {"name", "checks"?, "max_edges"?, "time_budget"?, "groups": [
/// {"spec", "checks"?, "expect": {partial report}}]} or just the group list.
/// Expectations match recursively on object keys and exactly otherwise.
/// Throws ManifestError or IoError.
SuiteResult run_suite_file(const std::filesystem::path& manifest, std::size_t max_workers = 0);
SuiteResult run_suite(const Json& manifest, std::size_t max_workers = 0);

}  // namespace saxl

#endif  // SAXL_REPORT_HPP
