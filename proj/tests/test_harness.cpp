#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "negapoly/errors.hpp"
#include "negapoly/harness.hpp"

using namespace negapoly;
using nlohmann::json;

namespace {

SuiteConfig small_config() {
  SuiteConfig c;
  c.q_grid = {1.0};
  c.k_max_I = 2;
  c.k_max_T = 1;
  c.k_max_L = 1;
  c.k_max_variant = 1;
  return c;
}

std::vector<json> parse_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("format and mode names") {
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK(parse_mode("both") == EvalMode::Both);
  CHECK(to_string(RecordStatus::NoClosedForm) == "no_closed_form");
  CHECK_THROWS_AS(parse_format("xml"), ArgumentError);
  CHECK_THROWS_AS(parse_mode("all"), ArgumentError);
}

TEST_CASE("config validation and merging") {
  SuiteConfig c;
  CHECK_NOTHROW(c.validate());
  c.merge_json(R"({"rel_tol": 1e-8, "q_grid": [0.5, 3], "format": "csv", "k_max_T": 2})");
  CHECK(c.rel_tol == 1e-8);
  CHECK(c.q_grid == std::vector<double>{0.5, 3});
  CHECK(c.format == OutputFormat::Csv);
  CHECK(c.k_max_T == 2);
  CHECK(c.k_max_I == 8);
  CHECK_THROWS_AS(c.merge_json(R"({"tolerance": 1})"), ArgumentError);
  CHECK_THROWS_AS(c.merge_json(R"({"rel_tol": "small"})"), ArgumentError);
  CHECK_THROWS_AS(c.merge_json("[1, 2]"), ArgumentError);
  CHECK_THROWS_AS(c.merge_json("{"), ArgumentError);
  SuiteConfig bad;
  bad.rel_tol = 1e-15;
  CHECK_THROWS_AS(bad.validate(), ArgumentError);
  bad = SuiteConfig{};
  bad.q_grid = {1.0, -2.0};
  CHECK_THROWS_AS(bad.validate(), ArgumentError);
}

TEST_CASE("config from environment") {
  const std::string path = "negapoly_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"k_max_I": 3, "safety_factor": 4})";
  }
  setenv("NEGAPOLY_CONFIG", path.c_str(), 1);
  const auto c = SuiteConfig::from_environment();
  unsetenv("NEGAPOLY_CONFIG");
  std::remove(path.c_str());
  CHECK(c.k_max_I == 3);
  CHECK(c.safety_factor == 4);
  CHECK(SuiteConfig::from_environment().k_max_I == 8);
}

TEST_CASE("empty grid") {
  SuiteConfig c;
  c.q_grid.clear();
  const auto report = verify_suite(c);
  CHECK(report.records.empty());
  CHECK(report.summary.total == 0);
}

TEST_CASE("small suite") {
  const auto report = verify_suite(small_config());
  CHECK(report.summary.failed == 0);
  CHECK(report.summary.total == report.records.size());
  CHECK(report.summary.passed + report.summary.failed + report.summary.no_closed_form == report.summary.total);
  CHECK(report.summary.no_closed_form > 0);
  bool saw_identity = false, saw_special = false;
  for (const auto& r : report.records) {
    if (r.suite == "identity") saw_identity = true;
    if (r.suite == "special_value") {
      saw_special = true;
      CHECK(r.q == 1.0);
    }
    if (r.suite == "closed_form") {
      CHECK(r.has_family);
      CHECK(r.abs_diff <= r.threshold);
      CHECK(r.evaluations > 0);
    }
  }
  CHECK(saw_identity);
  CHECK(saw_special);
}

TEST_CASE("json lines report") {
  const auto report = verify_suite(small_config());
  std::ostringstream os;
  write_report(report, os);
  const auto lines = parse_lines(os.str());
  REQUIRE(lines.size() == report.records.size() + 2);
  CHECK(lines.front()["type"] == "header");
  CHECK(lines.front()["schema_version"] == kReportSchemaVersion);
  CHECK(lines.front()["config"]["q_grid"] == json::array({1.0}));
  CHECK(lines.back()["type"] == "summary");
  CHECK(lines.back()["total"] == report.summary.total);
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    const auto& rec = lines[i];
    CHECK(rec["type"] == "record");
    CHECK(rec.contains("status"));
    CHECK(rec.contains("oracle_error_estimate"));
  }
  // reproducible byte for byte
  std::ostringstream again;
  write_report(verify_suite(small_config()), again);
  CHECK(again.str() == os.str());
}

TEST_CASE("csv report") {
  auto config = small_config();
  config.format = OutputFormat::Csv;
  const auto report = verify_suite(config);
  std::ostringstream os;
  write_report(report, os);
  std::istringstream in(os.str());
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  REQUIRE(rows.size() == report.records.size() + 2);
  CHECK(rows.front().rfind("suite,name,family", 0) == 0);
  CHECK(rows.back().rfind("# schema_version=1", 0) == 0);
}

TEST_CASE("eval command") {
  SuiteConfig c;
  std::ostringstream out, err;
  CHECK(eval_cmd({Family::T, 0, KernelKind::BoseMinus}, 1.0, EvalMode::Both, c, out, err) == 0);
  const auto rec = json::parse(out.str());
  CHECK(rec["status"] == "pass");
  CHECK(std::abs(rec["closed_value"].get<double>() - rec["oracle_value"].get<double>()) < 1e-12);

  std::ostringstream out2, err2;
  CHECK(eval_cmd({Family::T, 1, KernelKind::BoseMinus}, 1.0, EvalMode::Closed, c, out2, err2) == 2);
  CHECK_FALSE(err2.str().empty());
  std::ostringstream out3, err3;
  CHECK(eval_cmd({Family::T, 1, KernelKind::BoseMinus}, 1.0, EvalMode::Oracle, c, out3, err3) == 0);
  CHECK(json::parse(out3.str())["closed_value"].is_null());
  std::ostringstream out4, err4;
  CHECK(eval_cmd({Family::I, 2, KernelKind::BoseMinus}, -1.0, EvalMode::Both, c, out4, err4) == 2);
  std::ostringstream out5, err5;
  CHECK(eval_cmd({Family::I, -1, KernelKind::BoseMinus}, 1.0, EvalMode::Both, c, out5, err5) == 2);
}

TEST_CASE("table command") {
  std::ostringstream out, err;
  CHECK(table_cmd("bernoulli", OutputFormat::Json, out, err) == 0);
  const auto lines = parse_lines(out.str());
  REQUIRE(lines.size() == 21);
  CHECK(lines[12]["fraction"] == "-691/2730");
  std::ostringstream out2, err2;
  CHECK(table_cmd("constants", OutputFormat::Csv, out2, err2) == 0);
  CHECK(out2.str().rfind("name,value\n", 0) == 0);
  std::ostringstream out3, err3;
  CHECK(table_cmd("special_values", OutputFormat::Json, out3, err3) == 0);
  CHECK(parse_lines(out3.str()).size() == 19);
  std::ostringstream out4, err4;
  CHECK(table_cmd("zeros", OutputFormat::Json, out4, err4) == 2);
}
