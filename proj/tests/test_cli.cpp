#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "yangian/cli/cli.hpp"
#include "yangian/error.hpp"

using namespace yangian;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::config_invalid;
}

std::string without_elapsed(const Report& r) {
  Report c = r;
  c.elapsed_ms = 0;
  return emit_report(c, ReportFormat::json);
}

std::string random_expression(std::mt19937& rng) {
  std::uniform_int_distribution<int> cls(0, 3), mode(-3, 3), len(1, 3), terms(1, 3), coef(1, 5);
  const char names[] = {'e', 'f', 'h', 'k'};
  std::string s;
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    if (i) s += coef(rng) % 2 ? " + " : " - ";
    s += std::to_string(coef(rng)) + "/" + std::to_string(coef(rng));
    const int n = len(rng);
    for (int j = 0; j < n; ++j) s += std::string("*") + names[cls(rng)] + "[" + std::to_string(mode(rng)) + "]";
  }
  return s;
}

}  // namespace

TEST_CASE("expression parser", "[cli]") {
  const AlgebraElement two = parse_expression("e[1]*f[2] + 3/2*k[0]");
  CHECK(two.size() == 2);
  CHECK(two.coefficient({Generator{GenClass::K, 0}}) == Scalar(3, 2));

  // Raw words stay as written.
  CHECK(parse_expression("h[0]*e[3]").size() == 1);
  CHECK(normal_order(parse_expression("h[0]*e[3]"), -16).to_string() == "e[3]*h[0] - 2*e[3]");

  CHECK(parse_expression("-(e[0] - e[0])").is_zero());
  CHECK(parse_expression("-e[-2]") == AlgebraElement(Generator{GenClass::E, -2}) * Scalar(-1));
  CHECK(parse_expression("2*(e[0]+f[1])*k[0]").size() == 2);

  CHECK(code_of([] { parse_expression("e[1.5]"); }) == ErrorCode::syntax_error);
  CHECK(code_of([] { parse_expression("e[1]*"); }) == ErrorCode::syntax_error);
  CHECK(code_of([] { parse_expression("g[1]"); }) == ErrorCode::syntax_error);
  CHECK(code_of([] { parse_expression("1/0*e[1]"); }) == ErrorCode::syntax_error);
  CHECK(code_of([] { parse_expression("0.5*e[1]"); }) == ErrorCode::syntax_error);
  CHECK(code_of([] { parse_expression("(e[1]"); }) == ErrorCode::syntax_error);
  CHECK(code_of([] { parse_expression("e[33]"); }) == ErrorCode::mode_out_of_window);
  CHECK(code_of([] { parse_expression("e[-33]"); }) == ErrorCode::mode_out_of_window);
  CHECK(code_of([] { parse_expression("e[2]", {-1, 1}); }) == ErrorCode::mode_out_of_window);
  try {
    parse_expression("e[1] + f[x]");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position 9") != std::string::npos);
  }
}

TEST_CASE("normalized output re-parses to the same normal form", "[cli]") {
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    const std::string text = random_expression(rng);
    INFO(text);
    const AlgebraElement n = normal_order(parse_expression(text), -12);
    const AlgebraElement again = normal_order(parse_expression(n.to_string()), -12);
    CHECK(again == n);
    CHECK(again.to_string() == n.to_string());
  }
}

TEST_CASE("configuration", "[cli]") {
  SuiteConfig c;
  CHECK(c.floor == -16);
  CHECK(c.cutoff == 3);
  CHECK(c.order == 4);
  CHECK(c.window.lo == -4);
  CHECK(c.window.hi == 4);
  CHECK(c.points == 25);

  load_config(c, "# comment\nfloor = -10\n\ncutoff=2  # trailing\nwindow = -2..3\ndelta-shift = plus\n"
                 "kminus_reading = paper\n");
  CHECK(c.floor == -10);
  CHECK(c.cutoff == 2);
  CHECK(c.window.lo == -2);
  CHECK(c.window.hi == 3);
  CHECK(c.delta_shift == DeltaShift::plus);
  CHECK(c.kminus_reading == KMinusReading::printed);
  c.set("cutoff", "1");
  CHECK(c.cutoff == 1);

  SuiteConfig bad;
  CHECK(code_of([&] { load_config(bad, "floor -3"); }) == ErrorCode::config_invalid);
  CHECK(code_of([&] { bad.set("colour", "red"); }) == ErrorCode::config_invalid);
  CHECK(code_of([&] { bad.set("order", "3x"); }) == ErrorCode::config_invalid);
  CHECK(code_of([&] { bad.set("window", "3"); }) == ErrorCode::config_invalid);
  CHECK(code_of([&] { bad.set("delta_shift", "sideways"); }) == ErrorCode::config_invalid);
  bad.set("window", "-40..0");
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::config_invalid);
  CHECK(code_of([&] { run_suite("relations", bad); }) == ErrorCode::config_invalid);
  SuiteConfig reversed;
  reversed.set("window", "2..1");
  CHECK(code_of([&] { reversed.validate(); }) == ErrorCode::config_invalid);
  CHECK(code_of([] { run_suite("nonsense", SuiteConfig{}); }) == ErrorCode::config_invalid);
}

TEST_CASE("suites", "[cli]") {
  SuiteConfig c;
  SECTION("ybe") {
    c.points = 25;
    c.seed = 7;
    const Report r = run_suite("ybe", c);
    CHECK(r.passed());
    CHECK(r.suite == "ybe");
    CHECK(r.config["points"] == 25);
    CHECK(r.config["seed"] == 7);
  }
  SECTION("relations count window squared per line") {
    const Report r = run_suite("relations", c);
    CHECK(r.passed());
    std::map<std::string, int> per_line;
    for (const auto& chk : r.checks) ++per_line[chk.name.substr(0, chk.name.find('('))];
    for (const char* line : {"hh", "hk", "kk", "he", "ke", "hf", "kf", "ee", "ff", "ef"}) CHECK(per_line[line] == 81);
    CHECK(r.checks.size() >= 300);
  }
  SECTION("determinism") {
    c.points = 6;
    c.seed = 3;
    CHECK(without_elapsed(run_suite("pairing", c)) == without_elapsed(run_suite("pairing", c)));
    c.seed = 4;
    const Report other = run_suite("pairing", c);
    CHECK(other.passed());
  }
  SECTION("checks are sorted by name") {
    const Report r = run_suite("gauss", c);
    for (std::size_t i = 1; i < r.checks.size(); ++i) CHECK(r.checks[i - 1].name <= r.checks[i].name);
  }
  SECTION("the plus shift of the Cartan coproduct breaks the Hopf checks") {
    c.order = 2;
    CHECK(run_suite("hopf", c).passed());
    c.set("delta-shift", "plus");
    CHECK_FALSE(run_suite("hopf", c).passed());
  }
  SECTION("the printed K^- reading is rejected by the Gauss factors") {
    c.set("kminus-reading", "paper");
    const Report r = run_suite("gauss", c);
    CHECK_FALSE(r.passed());
    CHECK(r.config["kminus_reading"] == "printed");
    CHECK(r.config["effective"]["kminus_reading"] == "minus");
    for (const auto& chk : r.checks)
      if (chk.status == Status::fail) CHECK_FALSE(chk.witness.empty());
  }
  SECTION("configured floor is echoed and the effective one recorded") {
    const Report r = run_suite("dingfrenkel", c);
    CHECK(r.passed());
    CHECK(r.config["floor"] == -16);
    CHECK(r.config["effective"]["floor"] == -4);
  }
}

TEST_CASE("reports", "[cli]") {
  Report empty;
  empty.suite = "none";
  const auto ej = nlohmann::json::parse(emit_report(empty, ReportFormat::json));
  CHECK(ej["checks"].is_array());
  CHECK(ej["checks"].empty());
  for (const char* key : {"suite", "config", "checks", "elapsed_ms"}) CHECK(ej.contains(key));

  Report r;
  r.suite = "demo";
  r.add("ok", {{"m", 1}}, true);
  r.add("bad", {{"m", 2}}, false, "2*e[3]");
  r.skip("later", {}, "not run");
  const std::string json = emit_report(r, ReportFormat::json);
  const auto j = nlohmann::json::parse(json);
  CHECK_FALSE(j["checks"][0].contains("witness"));
  CHECK(j["checks"][1]["witness"] == "2*e[3]");
  CHECK(j["checks"][1]["status"] == "fail");

  const Report back = parse_report_json(json);
  REQUIRE(back.checks.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(back.checks[i].status == r.checks[i].status);
    CHECK(back.checks[i].name == r.checks[i].name);
    CHECK(back.checks[i].params == r.checks[i].params);
  }
  CHECK(emit_report(back, ReportFormat::json) == json);

  const std::string text = emit_report(r, ReportFormat::text);
  CHECK(text.find("suite demo: FAIL (1 passed, 1 failed, 1 skipped") != std::string::npos);
  CHECK(text.find("witness: 2*e[3]") != std::string::npos);

  CHECK(code_of([] { parse_report_json("{"); }) == ErrorCode::syntax_error);
  CHECK(code_of([] { parse_report_json("{\"suite\": 1}"); }) == ErrorCode::syntax_error);
  CHECK(code_of([] { parse_report_format("xml"); }) == ErrorCode::config_invalid);
}
