#include "saxl/report.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <limits>
#include <thread>

#include "saxl/analysis.hpp"
#include "saxl/error.hpp"
#include "saxl/group_spec.hpp"

namespace saxl {
namespace {

Json big(const BigInt& x) {
  if (x >= 0 && x <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
    return static_cast<std::uint64_t>(x);
  }
  return x.str();
}

Json points(const std::vector<Point>& v) {
  Json out = Json::array();
  for (Point p : v) out.push_back(p + 1);
  return out;
}

Json point_or_null(const std::optional<Point>& p) { return p ? Json(*p + 1) : Json(nullptr); }

Json edge_or_null(const std::optional<Edge>& e) { return e ? points(*e) : Json(nullptr); }

const char* status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Holds: return "holds";
    case VerdictStatus::Fails: return "fails";
    case VerdictStatus::Unknown: return "unknown";
  }
  return "unknown";
}

Json verdict_json(const ConjectureVerdict& v) {
  Json out;
  out["status"] = status_name(v.status);
  out["pairs_checked"] = v.pairs_checked;
  out["reason"] = v.reason;
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses) {
    Json item;
    item["alpha"] = w.alpha + 1;
    item["beta"] = w.beta + 1;
    item["gamma"] = point_or_null(w.gamma);
    item["e_alpha"] = edge_or_null(w.e_alpha);
    item["e_beta"] = edge_or_null(w.e_beta);
    witnesses.push_back(std::move(item));
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

Json status_only(const char* status) {
  Json out;
  out["status"] = status;
  return out;
}

bool is_prime_number(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

class Runner {
 public:
  Runner(const ReportConfig& cfg, ReportResult& result)
      : cfg_(cfg), result_(result), deadline_(cfg.search.time_budget) {
    search_ = cfg.search;
    if (!search_.deadline) search_.deadline = &deadline_;
  }

  const BaseSearchConfig& search() const { return search_; }
  const Deadline* deadline() const { return search_.deadline; }

  /// Runs one check; errors are logged and reported as false.
  bool run(const char* name, const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    try {
      body();
    } catch (const Error& e) {
      ok = false;
      if (e.code() == Errc::BudgetExceeded) result_.budget_exhausted = true;
      if (e.code() == Errc::InvariantViolation) result_.invariant_failure = true;
      Json err;
      err["check"] = name;
      err["code"] = std::string(errc_name(e.code()));
      err["message"] = e.what();
      errors_.push_back(std::move(err));
    }
    if (cfg_.timings) {
      timings_[name] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return ok;
  }

  void violation(const std::string& check, const std::string& message) {
    result_.invariant_failure = true;
    Json err;
    err["check"] = check;
    err["code"] = "InvariantViolation";
    err["message"] = message;
    errors_.push_back(std::move(err));
  }

  Json errors() const { return errors_; }
  Json timings() const { return timings_; }

 private:
  const ReportConfig& cfg_;
  ReportResult& result_;
  Deadline deadline_;
  BaseSearchConfig search_;
  Json errors_ = Json::array();
  Json timings_ = Json::object();
};

}  // namespace

void parse_checks(std::string_view text, ReportConfig& cfg) {
  ReportConfig off = cfg;
  off.cnc = off.edcnc = off.complete = off.valency = off.flagtour = false;
  off.rays = off.invariants = false;
  off.gossip.reset();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    if (item == "all") {
      ReportConfig defaults;
      off.cnc = off.edcnc = off.complete = off.valency = off.flagtour = true;
      off.gossip = off.gossip.value_or(*defaults.gossip);
    } else if (item == "cnc") {
      off.cnc = true;
    } else if (item == "edcnc") {
      off.edcnc = true;
    } else if (item == "complete") {
      off.complete = true;
    } else if (item == "valency") {
      off.valency = true;
    } else if (item == "flagtour") {
      off.flagtour = true;
    } else if (item == "rays") {
      off.rays = true;
    } else if (item == "invariants") {
      off.invariants = true;
    } else if (item == "gossip") {
      off.gossip = ReportConfig{}.gossip;
    } else if (item.substr(0, 7) == "gossip=") {
      std::size_t n = 0;
      std::string_view digits = item.substr(7);
      if (digits.empty()) throw ParseError(pos + 7, "gossip=N needs a number");
      for (std::size_t i = 0; i < digits.size(); ++i) {
        char c = digits[i];
        if (c < '0' || c > '9' || n > 1000) throw ParseError(pos + 7 + i, "bad gossip bound");
        n = n * 10 + static_cast<std::size_t>(c - '0');
      }
      if (n == 0) throw ParseError(pos + 7, "gossip bound must be positive");
      off.gossip = n;
    } else {
      throw ParseError(pos, "unknown check '" + std::string(item) + "'");
    }
    pos = end + 1;
  }
  cfg = off;
}

ReportResult run_report(std::string_view spec_text, const ReportConfig& cfg) {
  ReportResult result;
  Runner runner(cfg, result);
  GroupSpec spec = parse_spec(spec_text);
  auto build_start = std::chrono::steady_clock::now();
  BuiltGroup built = build_group(spec);
  double build_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - build_start).count();
  const PermGroup& g = built.group;
  const std::size_t degree = g.degree();

  Json& r = result.report;
  r["schema_version"] = kReportSchemaVersion;
  r["group_spec"] = spec.to_string();
  r["degree"] = degree;
  r["order"] = big(g.order());
  r["tags"] = built.tags;
  r["notes"] = built.notes;
  r["transitive"] = g.is_transitive();
  r["primitive"] = g.is_primitive();

  std::optional<std::size_t> b;
  runner.run("base_size", [&] { b = base_size(g, runner.search()); });
  r["base_size"] = b ? Json(*b) : Json(nullptr);

  std::optional<SaxlInstance> inst;
  if (b && *b >= 2) {
    runner.run("edges", [&] { inst = build_saxl(g, runner.search()); });
  } else if (b) {
    runner.run("edges", [&] {
      throw Error(Errc::BaseSizeTooSmall, "no Saxl hypergraph for base size " + std::to_string(*b));
    });
  }
  std::optional<std::size_t> valency;
  if (inst) valency = common_valency(*inst);
  r["uniformity"] = inst ? Json(inst->b) : Json(nullptr);
  r["edge_count"] = inst ? Json(inst->hypergraph.edges().size()) : Json(nullptr);
  r["valency"] = valency ? Json(*valency) : Json(nullptr);
  if (inst && valency && inst->transitive &&
      inst->hypergraph.edges().size() * inst->b != degree * *valency) {
    runner.violation("valency", "edge_count * b differs from degree * valency");
  }

  // Completeness from the edge count, cross-checked against K(b).
  r["complete"] = nullptr;
  r["kn_certificate"] = nullptr;
  if (cfg.complete && b) {
    runner.run("complete", [&] {
      auto kn = is_kn_complete(g, *b, runner.search());
      Json cert;
      cert["n"] = kn.n;
      cert["complete"] = kn.complete;
      cert["recursive"] = kn.recursive;
      cert["direct_checked"] = kn.direct_checked;
      cert["direct"] = kn.direct_checked ? Json(kn.direct) : Json(nullptr);
      cert["nodes"] = kn.nodes.size();
      cert["failing_path"] = kn.failing_path ? points(*kn.failing_path) : Json(nullptr);
      cert["transitivity_consistent"] =
          kn.transitivity_consistent ? Json(*kn.transitivity_consistent) : Json(nullptr);
      r["kn_certificate"] = std::move(cert);
      bool complete = kn.complete;
      if (inst) {
        complete = BigInt(inst->hypergraph.edges().size()) == binomial(degree, *b);
        if (complete != kn.complete) runner.violation("complete", "edge count disagrees with K(b)");
      }
      if (kn.transitivity_consistent == false) {
        runner.violation("complete", "K(b) without (b-1)-transitivity");
      }
      r["complete"] = complete;
    });
  }

  r["valency_check"] = nullptr;
  if (cfg.valency && inst && inst->transitive) {
    runner.run("valency", [&] {
      auto v = valency_check(*inst, runner.search());
      Json out;
      out["d_direct"] = v.d_direct;
      out["d_formula"] = big(v.d_formula);
      out["orbit_count"] = v.orbit_count;
      out["ordered_bases"] = v.ordered_bases;
      out["point_stabilizer_order"] = big(v.point_stabilizer_order);
      out["agrees"] = v.agrees();
      r["valency_check"] = std::move(out);
      if (!v.agrees()) runner.violation("valency", "valency formula disagrees with the degree");
    });
  }

  r["cnc"] = status_only(cfg.cnc ? "unknown" : "skipped");
  if (cfg.cnc && b && *b >= 2) {
    runner.run("cnc", [&] {
      r["cnc"] = verdict_json(inst ? check_cnc(*inst, runner.deadline())
                                   : check_cnc_by_adjacency(g, *b, runner.search()));
    });
  }

  r["edge_disjoint_cnc"] = status_only(cfg.edcnc ? "unknown" : "skipped");
  if (cfg.edcnc && inst) {
    runner.run("edcnc", [&] {
      r["edge_disjoint_cnc"] = verdict_json(check_edge_disjoint_cnc(*inst, runner.deadline()));
    });
  }

  r["gossip"] = status_only(cfg.gossip ? "unknown" : "skipped");
  if (cfg.gossip && inst) {
    runner.run("gossip", [&] {
      auto profile = gossip_profile(*inst, *cfg.gossip, runner.deadline());
      Json out;
      out["status"] = "done";
      out["values"] = profile.values;
      Json witnesses = Json::array();
      for (const auto& w : profile.witnesses) witnesses.push_back(points(w));
      out["witnesses"] = std::move(witnesses);
      out["g2_dichotomy"] = profile.g2_dichotomy ? Json(*profile.g2_dichotomy) : Json(nullptr);
      r["gossip"] = std::move(out);
      if (profile.g2_dichotomy == false) runner.violation("gossip", "g_2 = 1 with b >= 3");
    });
  }

  r["flag_tour"] = status_only(cfg.flagtour ? "unknown" : "skipped");
  if (cfg.flagtour && inst) {
    runner.run("flagtour", [&] {
      auto v = flag_tour_verdict(*inst, built.tags);
      Json out;
      out["status"] = "done";
      out["has_tour"] = v.parity.has_tour;
      out["odd_vertex_count"] = v.parity.odd_vertex_count;
      out["odd_degree_vertex"] = point_or_null(v.parity.odd_degree_vertex);
      out["matched_case"] = v.matched_case ? Json(*v.matched_case) : Json(nullptr);
      out["consistent"] = v.consistent;
      r["flag_tour"] = std::move(out);
      if (!v.consistent) runner.violation("flagtour", "tour parity contradicts the matched case");
    });
  }

  r["prime_valency"] = nullptr;
  if (inst && valency) {
    r["prime_valency"] =
        inst->transitive && (inst->b == 3 || inst->b == 4) && is_prime_number(*valency);
  }

  r["rays"] = status_only(cfg.rays ? "unknown" : "skipped");
  if (cfg.rays && inst) {
    runner.run("rays", [&] {
      auto v = rays_semiregular_check(*inst, runner.deadline());
      Json out;
      out["status"] = "done";
      out["semiregular"] = v.semiregular;
      out["elements_checked"] = v.elements_checked;
      out["all_elements"] = v.all_elements;
      out["ray_count"] = big(v.ray_count);
      r["rays"] = std::move(out);
      if (!v.semiregular) runner.violation("rays", "an element fixes an ordered edge");
    });
  }

  r["invariants"] = status_only(cfg.invariants ? "unknown" : "skipped");
  if (cfg.invariants && inst) {
    runner.run("invariants", [&] {
      Json out;
      out["status"] = "done";
      Json list = Json::array();
      auto results = check_invariants(*inst, cfg.gossip.value_or(3), runner.search());
      for (const auto& inv : results) {
        Json item;
        item["name"] = inv.name;
        item["applicable"] = inv.applicable;
        item["holds"] = inv.holds;
        item["detail"] = inv.detail;
        list.push_back(std::move(item));
        if (!inv.holds) runner.violation("invariants", inv.name + " fails");
      }
      out["results"] = std::move(list);
      r["invariants"] = std::move(out);
    });
  }

  r["errors"] = runner.errors();
  if (cfg.timings) {
    Json t = runner.timings();
    t["build"] = build_seconds;
    r["timings"] = std::move(t);
  }
  if (cfg.keep_edges && inst) {
    result.edges = EdgeDump{degree, inst->b, inst->hypergraph.edges()};
  }
  return result;
}

ExitStatus exit_status_for(Errc code) {
  switch (code) {
    case Errc::BudgetExceeded: return ExitStatus::BudgetExhausted;
    case Errc::InvariantViolation: return ExitStatus::ExpectationFailed;
    default: return ExitStatus::InputError;
  }
}

namespace {

void match(const Json& expected, const Json& actual, const std::string& path, Json& mismatches) {
  if (expected.is_object()) {
    if (!actual.is_object()) {
      mismatches.push_back({{"field", path}, {"expected", expected}, {"actual", actual}});
      return;
    }
    for (const auto& [key, value] : expected.items()) {
      std::string sub = path.empty() ? key : path + "." + key;
      if (!actual.contains(key)) {
        mismatches.push_back({{"field", sub}, {"expected", value}, {"actual", nullptr}});
        continue;
      }
      match(value, actual.at(key), sub, mismatches);
    }
    return;
  }
  if (expected != actual) {
    mismatches.push_back({{"field", path}, {"expected", expected}, {"actual", actual}});
  }
}

struct SuiteEntry {
  std::string spec;
  ReportConfig cfg;
  Json expect;
};

ReportConfig suite_config(const Json& node, ReportConfig base) {
  try {
    if (node.contains("checks")) parse_checks(node.at("checks").get<std::string>(), base);
    if (node.contains("max_edges")) base.search.max_edges = node.at("max_edges").get<std::size_t>();
    if (node.contains("time_budget")) {
      base.search.time_budget = std::chrono::duration<double>(node.at("time_budget").get<double>());
    }
  } catch (const Json::exception& e) {
    throw Error(Errc::ManifestError, e.what());
  } catch (const ParseError& e) {
    throw Error(Errc::ManifestError, e.what());
  }
  return base;
}

}  // namespace

SuiteResult run_suite(const Json& manifest, std::size_t max_workers) {
  const Json* groups = &manifest;
  ReportConfig defaults;
  std::string name;
  if (manifest.is_object()) {
    if (!manifest.contains("groups")) throw Error(Errc::ManifestError, "missing \"groups\"");
    groups = &manifest.at("groups");
    defaults = suite_config(manifest, defaults);
    if (manifest.contains("name") && manifest.at("name").is_string()) name = manifest.at("name");
  }
  if (!groups->is_array()) throw Error(Errc::ManifestError, "\"groups\" must be a list");
  std::vector<SuiteEntry> entries;
  for (const auto& node : *groups) {
    if (!node.is_object() || !node.contains("spec") || !node.at("spec").is_string()) {
      throw Error(Errc::ManifestError, "every group needs a \"spec\" string");
    }
    Json expect = node.value("expect", Json::object());
    if (!expect.is_object()) throw Error(Errc::ManifestError, "\"expect\" must be an object");
    entries.push_back({node.at("spec").get<std::string>(), suite_config(node, defaults), expect});
  }

  std::vector<Json> results(entries.size());
  std::vector<ExitStatus> statuses(entries.size(), ExitStatus::Ok);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < entries.size();) {
      const auto& e = entries[i];
      Json item;
      item["spec"] = e.spec;
      Json mismatches = Json::array();
      try {
        auto rep = run_report(e.spec, e.cfg);
        match(e.expect, rep.report, "", mismatches);
        if (!mismatches.empty() || rep.invariant_failure) {
          statuses[i] = ExitStatus::ExpectationFailed;
        } else if (rep.budget_exhausted) {
          statuses[i] = ExitStatus::BudgetExhausted;
        }
        item["pass"] = statuses[i] == ExitStatus::Ok;
        item["mismatches"] = std::move(mismatches);
        item["report"] = std::move(rep.report);
      } catch (const Error& err) {
        statuses[i] = exit_status_for(err.code());
        item["pass"] = false;
        item["mismatches"] = std::move(mismatches);
        item["error"] = {{"code", std::string(errc_name(err.code()))}, {"message", err.what()}};
      }
      results[i] = std::move(item);
    }
  };
  std::size_t workers = max_workers ? max_workers : std::thread::hardware_concurrency();
  workers = std::max<std::size_t>(1, std::min(workers, entries.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  SuiteResult out;
  std::size_t passed = 0;
  bool failed = false, budget = false, input = false;
  Json table = Json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    passed += statuses[i] == ExitStatus::Ok;
    failed |= statuses[i] == ExitStatus::ExpectationFailed;
    budget |= statuses[i] == ExitStatus::BudgetExhausted;
    input |= statuses[i] == ExitStatus::InputError;
    table.push_back({{"spec", entries[i].spec}, {"pass", statuses[i] == ExitStatus::Ok}});
  }
  if (input) {
    out.status = ExitStatus::InputError;
  } else if (failed) {
    out.status = ExitStatus::ExpectationFailed;
  } else if (budget) {
    out.status = ExitStatus::BudgetExhausted;
  }
  Json& s = out.summary;
  s["schema_version"] = kReportSchemaVersion;
  s["manifest"] = name;
  s["groups"] = entries.size();
  s["passed"] = passed;
  s["failed"] = entries.size() - passed;
  s["table"] = std::move(table);
  s["results"] = std::move(results);
  return out;
}

SuiteResult run_suite_file(const std::filesystem::path& path, std::size_t max_workers) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  Json manifest;
  try {
    manifest = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(Errc::ManifestError, path.string() + ": " + e.what());
  }
  return run_suite(manifest, max_workers);
}

}  // namespace saxl
