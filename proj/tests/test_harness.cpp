#include <doctest.h>

#include <cstdlib>
#include <random>
#include <sstream>

#include <json.hpp>

#include "thinset/config.hpp"
#include "thinset/errors.hpp"
#include "thinset/experiments.hpp"
#include "thinset/report.hpp"

using namespace thinset;

namespace {

ExperimentReport random_report(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> small(0, 5);
  std::normal_distribution<double> nd(0.0, 100.0);
  ExperimentReport r;
  r.experiment_id = "E" + std::to_string(1 + small(gen));
  int nc = small(gen);
  for (int i = 0; i < nc; ++i) r.config["k" + std::to_string(i)] = std::to_string(small(gen));
  int nk = small(gen);
  for (int i = 0; i < nk; ++i) {
    CheckResult c;
    c.name = "check_" + std::to_string(i);
    c.statistic = nd(gen);
    c.fitted_constant = i == 2 ? std::numeric_limits<double>::infinity() : nd(gen);
    c.pass = small(gen) % 2 == 0;
    c.detail = i % 2 ? "a \"quoted\", detail" : "";
    r.checks.push_back(c);
  }
  if (small(gen) == 0) r.artifacts.push_back("out/report.json");
  return r;
}

std::size_t line_count(const std::string& s) {
  std::size_t n = 0;
  for (char ch : s) n += ch == '\n';
  return n;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("config parsing") {
  auto c = Config::parse("seed = 7\n# comment\n[E5]\ntrials = 40\np = 1.25\n\n[E1]\np = 1.2, 1.5\n");
  CHECK(c.get_int("E5.trials", 0) == 40);
  CHECK(c.get_double("E5.p", 0.0) == doctest::Approx(1.25));
  CHECK(c.get_doubles("E1.p", {}) == std::vector<double>{1.2, 1.5});
  CHECK(c.get_int("E5.missing", 9) == 9);
  CHECK(c.seed() == 7);
  c.set("E5.trials", "41");
  CHECK(c.get_int("E5.trials", 0) == 41);
  CHECK_THROWS_AS(c.get_double("E1.p", 0.0), UsageError);
  CHECK_THROWS_AS(Config::load_file("/nonexistent/thinset.ini"), UsageError);
}

TEST_CASE("seed precedence") {
  ::setenv("THINSET_SEED", "99", 1);
  CHECK(Config::parse("[general]\nseed = 5\n").seed() == 5);
  CHECK(Config::parse("").seed() == 99);
  ::unsetenv("THINSET_SEED");
  CHECK(Config::parse("").seed() == 0);
}

TEST_CASE("report json round trip") {
  std::mt19937_64 gen(12);
  for (int i = 0; i < 20; ++i) {
    auto r = random_report(gen);
    auto text = emit_report(r, ReportFormat::json);
    auto back = parse_report(text);
    CHECK(back == r);
    CHECK(emit_report(back, ReportFormat::json) == text);
    CHECK(back.all_pass() == r.all_pass());
  }
}

TEST_CASE("report layout") {
  ExperimentReport r;
  r.experiment_id = "E7";
  r.config["seed"] = "1";
  r.runtime_ms = 12.5;
  auto plain = nlohmann::ordered_json::parse(emit_report(r, ReportFormat::json));
  std::vector<std::string> keys;
  for (auto& [k, v] : plain.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"experiment_id", "config", "checks", "all_pass", "artifacts"});
  CHECK(plain["all_pass"] == true);

  auto meta = nlohmann::json::parse(emit_report(r, ReportFormat::json, true));
  CHECK(meta["metadata"]["runtime_ms"].get<double>() == doctest::Approx(12.5));
  CHECK(parse_report(meta.dump()).runtime_ms == doctest::Approx(12.5));

  std::mt19937_64 gen(2);
  for (int i = 0; i < 10; ++i) {
    auto rr = random_report(gen);
    CHECK(line_count(emit_report(rr, ReportFormat::csv)) == rr.checks.size() + 1);
  }
  CHECK(parse_report_format("csv") == ReportFormat::csv);
  CHECK_THROWS_AS(parse_report_format("xml"), UsageError);
}

TEST_CASE("experiment registry") {
  CHECK(experiment_ids().size() == 11);
  CHECK_THROWS_AS(run_experiment("E99", Config()), UsageError);
}

TEST_CASE("runs are deterministic and echo their parameters") {
  auto cfg = Config::parse("seed = 3\n[E5]\nn_max = 7\ntrials = 60\n[E10]\nn_max = 8\n");
  for (const char* id : {"E5", "E7", "E10", "E11"}) {
    auto a = run_experiment(id, cfg);
    auto b = run_experiment(id, cfg);
    CHECK(emit_report(a, ReportFormat::json) == emit_report(b, ReportFormat::json));
    CHECK(a.config.at("seed") == "3");
    CHECK_FALSE(a.checks.empty());
  }
  auto e5 = run_experiment("E5", cfg);
  CHECK(e5.config.at("E5.trials") == "60");
  CHECK(e5.config.at("E5.n_max") == "7");
  CHECK(e5.config.count("E5.p") == 1);

  auto other = run_experiment("E5", Config::parse("seed = 4\n[E5]\nn_max = 7\ntrials = 60\n"));
  CHECK(emit_report(other, ReportFormat::json) != emit_report(e5, ReportFormat::json));
}

TEST_CASE("bad parameters are reported with context") {
  auto cfg = Config::parse("[E5]\ntrials = -3\n");
  CHECK_THROWS_AS(run_experiment("E5", cfg), UsageError);
  auto bad = Config::parse("[E10]\np = 0.5\n");
  try {
    run_experiment("E10", bad);
    FAIL("expected an error");
  } catch (const UsageError&) {
    FAIL("domain errors should not surface as usage errors");
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).rfind("E10: ", 0) == 0);
  }
}

}  // TEST_SUITE
