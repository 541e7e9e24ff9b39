#include <gtest/gtest.h>

#include "saxl/base_engine.hpp"
#include "saxl/group_spec.hpp"
#include "saxl/error.hpp"
#include "saxl/report.hpp"

using namespace saxl;

namespace {

const std::string kManifests = std::string(SAXL_TEST_DATA) + "/manifests/";

std::vector<Point> to_points(const Json& edge) {
  std::vector<Point> out;
  for (const auto& p : edge) out.push_back(p.get<Point>() - 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Report, ParseChecks) {
  ReportConfig cfg;
  parse_checks("cnc,gossip=5", cfg);
  EXPECT_TRUE(cfg.cnc);
  EXPECT_FALSE(cfg.edcnc);
  EXPECT_FALSE(cfg.complete);
  EXPECT_EQ(cfg.gossip, 5u);
  parse_checks("all", cfg);
  EXPECT_TRUE(cfg.edcnc && cfg.complete && cfg.valency && cfg.flagtour);
  try {
    parse_checks("cnc,bogus", cfg);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_checks("gossip=", cfg), ParseError);
  EXPECT_THROW(parse_checks("gossip=0", cfg), ParseError);
}

TEST(Report, SymmetricGroupOnFourPoints) {
  auto r = run_report("S:4").report;
  EXPECT_EQ(r["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(r["complete"], true);
  EXPECT_EQ(r["base_size"], 3);
  EXPECT_EQ(r["valency"], 3);
  EXPECT_EQ(r["flag_tour"]["has_tour"], false);
  EXPECT_EQ(r["prime_valency"], true);
  EXPECT_EQ(r["cnc"]["status"], "holds");
  EXPECT_EQ(r["edge_disjoint_cnc"]["status"], "fails");
  EXPECT_TRUE(r["errors"].empty());
  EXPECT_FALSE(r.contains("timings"));
}

TEST(Report, FrobeniusAndMathieu) {
  auto a = run_report("AGL1:5:4").report;
  EXPECT_EQ(a["base_size"], 2);
  EXPECT_EQ(a["complete"], true);
  auto m = run_report("CAT:M12").report;
  EXPECT_EQ(m["base_size"], 5);
  EXPECT_EQ(m["complete"], true);
  EXPECT_EQ(m["order"], 95040);
}

TEST(Report, KeyOrderIsFixed) {
  auto r = run_report("A:5").report;
  std::vector<std::string> keys;
  for (const auto& [k, v] : r.items()) keys.push_back(k);
  std::vector<std::string> expected{
      "schema_version", "group_spec", "degree",        "order",          "tags",
      "notes",          "transitive", "primitive",     "base_size",      "uniformity",
      "edge_count",     "valency",    "complete",      "kn_certificate", "valency_check",
      "cnc",            "edge_disjoint_cnc",           "gossip",         "flag_tour",
      "prime_valency",  "rays",       "invariants",    "errors"};
  EXPECT_EQ(keys, expected);
}

TEST(Report, Deterministic) {
  ReportConfig cfg;
  parse_checks("all,rays,invariants", cfg);
  for (const char* spec : {"PGL2:7", "CAT:M11", "CAT:S5_pairs"}) {
    EXPECT_EQ(run_report(spec, cfg).report.dump(), run_report(spec, cfg).report.dump()) << spec;
  }
}

TEST(Report, NumericFieldsConsistent) {
  for (const char* spec : {"PGL2:9", "CAT:M10", "AFFDEL:5:1", "CAT:PSL(3,3)"}) {
    auto r = run_report(spec).report;
    EXPECT_EQ(r["edge_count"].get<std::size_t>() * r["base_size"].get<std::size_t>(),
              r["degree"].get<std::size_t>() * r["valency"].get<std::size_t>())
        << spec;
  }
}

TEST(Report, WitnessesRevalidate) {
  for (const char* spec : {"PGL2:7", "A:5", "CAT:M10", "S:3"}) {
    auto built = run_report(spec);
    const auto& r = built.report;
    auto g = build_group(parse_spec(spec)).group;
    std::size_t b = r["base_size"];
    for (const char* key : {"cnc", "edge_disjoint_cnc"}) {
      const auto& v = r[key];
      for (const auto& w : v["witnesses"]) {
        if (w["e_alpha"].is_null()) {
          // Failing pairs: only the counting bound may fail here.
          EXPECT_GT(2 * b - 1, g.degree());
          continue;
        }
        auto ea = to_points(w["e_alpha"]);
        auto eb = to_points(w["e_beta"]);
        EXPECT_EQ(ea.size(), b);
        EXPECT_TRUE(is_base(g, ea));
        EXPECT_TRUE(is_base(g, eb));
        Point alpha = w["alpha"].get<Point>() - 1;
        Point beta = w["beta"].get<Point>() - 1;
        Point gamma = w["gamma"].get<Point>() - 1;
        EXPECT_TRUE(std::binary_search(ea.begin(), ea.end(), alpha));
        EXPECT_TRUE(std::binary_search(eb.begin(), eb.end(), beta));
        EXPECT_TRUE(std::binary_search(ea.begin(), ea.end(), gamma));
        EXPECT_TRUE(std::binary_search(eb.begin(), eb.end(), gamma));
      }
    }
  }
}

TEST(Report, EdgeBudgetFallsBackToAdjacency) {
  ReportConfig cfg;
  cfg.search.max_edges = 10;
  auto res = run_report("PGL2:7", cfg);
  const auto& r = res.report;
  EXPECT_TRUE(res.budget_exhausted);
  EXPECT_EQ(r["base_size"], 3);
  EXPECT_TRUE(r["edge_count"].is_null());
  EXPECT_EQ(r["complete"], true);
  EXPECT_EQ(r["cnc"]["status"], "holds");
  EXPECT_EQ(r["edge_disjoint_cnc"]["status"], "unknown");
  EXPECT_EQ(r["gossip"]["status"], "unknown");
  ASSERT_FALSE(r["errors"].empty());
  EXPECT_EQ(r["errors"][0]["code"], "BudgetExceeded");
}

TEST(Report, LargeOrdersAreStrings) {
  ReportConfig cfg;
  parse_checks("cnc", cfg);
  auto res = run_report("S:40", cfg);
  EXPECT_EQ(res.report["order"], "815915283247897734345611269596115894272000000000");
  EXPECT_TRUE(res.report["base_size"].is_null());
  EXPECT_TRUE(res.budget_exhausted);
}

TEST(Report, TimingsOnRequest) {
  ReportConfig cfg;
  cfg.timings = true;
  auto r = run_report("S:5", cfg).report;
  ASSERT_TRUE(r.contains("timings"));
  EXPECT_TRUE(r["timings"].contains("build"));
}

TEST(Report, SpecErrorsThrow) {
  try {
    run_report("PGL2:6");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_EQ(exit_status_for(Errc::ParseError), ExitStatus::InputError);
  EXPECT_EQ(exit_status_for(Errc::BudgetExceeded), ExitStatus::BudgetExhausted);
  EXPECT_EQ(exit_status_for(Errc::InvariantViolation), ExitStatus::ExpectationFailed);
}

TEST(Report, EdgesKeptOnRequest) {
  ReportConfig cfg;
  cfg.keep_edges = true;
  auto res = run_report("S:4", cfg);
  ASSERT_TRUE(res.edges.has_value());
  EXPECT_EQ(res.edges->edges.size(), 4u);
  EXPECT_EQ(res.edges->base_size, 3u);
}

TEST(Suite, Manifests) {
  for (const char* name : {"completeness.json", "prime-valency.json", "cnc.json"}) {
    auto res = run_suite_file(kManifests + name, 1);
    EXPECT_EQ(res.status, ExitStatus::Ok) << name;
    EXPECT_EQ(res.summary["failed"], 0) << name;
  }
}

TEST(Suite, PrimeValencyOnlyFlagsSym4) {
  auto res = run_suite_file(kManifests + "prime-valency.json", 1);
  std::vector<std::string> flagged;
  for (const auto& item : res.summary["results"]) {
    if (item["report"]["prime_valency"] == true) flagged.push_back(item["spec"]);
  }
  EXPECT_EQ(flagged, std::vector<std::string>{"S:4"});
}

TEST(Suite, MismatchesAndErrors) {
  Json manifest = Json::parse(R"({"groups": [
    {"spec": "S:4", "checks": "complete", "expect": {"base_size": 3, "complete": false}},
    {"spec": "S:5", "checks": "cnc", "expect": {"cnc": {"status": "holds"}}}
  ]})");
  auto res = run_suite(manifest, 2);
  EXPECT_EQ(res.status, ExitStatus::ExpectationFailed);
  const auto& first = res.summary["results"][0];
  EXPECT_EQ(first["pass"], false);
  ASSERT_EQ(first["mismatches"].size(), 1u);
  EXPECT_EQ(first["mismatches"][0]["field"], "complete");
  EXPECT_EQ(res.summary["results"][1]["pass"], true);

  auto bad_spec = run_suite(Json::parse(R"([{"spec": "PGL2:6"}])"));
  EXPECT_EQ(bad_spec.status, ExitStatus::InputError);

  auto budget = run_suite(Json::parse(R"([{"spec": "PGL2:7", "max_edges": 5}])"));
  EXPECT_EQ(budget.status, ExitStatus::BudgetExhausted);

  for (const char* text : {R"({"name": "x"})", R"([{"expect": {}}])", R"([{"spec": "S:4", "expect": 3}])",
                           R"([{"spec": "S:4", "checks": "nope"}])"}) {
    try {
      run_suite(Json::parse(text));
      FAIL() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::ManifestError) << text;
    }
  }
  try {
    run_suite_file("/nonexistent/manifest.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IoError);
  }
}

TEST(Suite, OrderedOutputWithWorkers) {
  auto one = run_suite_file(kManifests + "cnc.json", 1);
  auto many = run_suite_file(kManifests + "cnc.json", 4);
  EXPECT_EQ(one.summary.dump(), many.summary.dump());
}
