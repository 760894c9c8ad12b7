// dyctl: command-line front end for the DY(gl(1|1)) verifiers.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "yangian/cli/cli.hpp"
#include "yangian/error.hpp"
#include "yangian/frt/frt.hpp"

using namespace yangian;

namespace {

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::config_invalid, "cannot read " + path);
  return read_all(in);
}

/// "x=Q,y=Q".
Assignment parse_point(const std::string& text) {
  Assignment at;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::config_invalid, "expected var=value, got '" + item + "'");
    at[parse_var(item.substr(0, eq))] = Scalar::parse(item.substr(eq + 1));
  }
  return at;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the super Yangian double DY(gl(1|1))"};
  app.require_subcommand(1);

  std::string expr;
  int normalize_floor = -16;
  auto* normalize = app.add_subcommand("normalize", "Normal-order a generator expression");
  normalize->add_option("expr", expr, "Expression such as \"h[0]*e[3]\"")->required();
  normalize->add_option("--floor", normalize_floor, "Drop words of mode sum below this floor");

  std::string suite, config_file, format = "text", output;
  std::map<std::string, std::string> overrides;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--config", config_file, "Flat key = value configuration file");
  for (const char* key : {"floor", "cutoff", "order", "window", "points", "seed", "delta-shift", "kminus-reading"}) {
    verify->add_option_function<std::string>(std::string("--") + key,
                                             [&overrides, key](const std::string& v) { overrides[key] = v; });
  }
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--output", output, "Also write the json report to this file");

  std::string eval_point;
  auto* rmatrix = app.add_subcommand("rmatrix", "Print the scalar-free R matrix");
  rmatrix->add_option("--eval", eval_point, "Point such as x=3/2,y=1/3");

  std::string report_format = "text", report_input;
  auto* report = app.add_subcommand("report", "Re-emit a json report");
  report->add_option("--format", report_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  report->add_option("--input", report_input, "Report file (default: standard input)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*normalize) {
      const AlgebraElement a = normal_order(parse_expression(expr), normalize_floor);
      std::cout << a.to_string();
      if (a.truncated()) std::cout << "  (exact at mode sums >= " << a.floor() << ")";
      std::cout << "\n";
      return 0;
    }
    if (*verify) {
      SuiteConfig cfg;
      if (!config_file.empty()) load_config(cfg, read_file(config_file));
      for (const auto& [k, v] : overrides) cfg.set(k, v);
      const Report r = run_suite(suite, cfg);
      std::cout << emit_report(r, parse_report_format(format));
      if (!output.empty()) {
        std::ofstream out(output);
        out << emit_report(r, ReportFormat::json);
      }
      return r.passed() ? 0 : 1;
    }
    if (*rmatrix) {
      const RMatrix4 r = rbar_matrix();
      if (eval_point.empty()) {
        std::cout << r.to_string();
        return 0;
      }
      const Assignment at = parse_point(eval_point);
      std::ostringstream os;
      for (int i = 0; i < 4; ++i) {
        os << "[";
        for (int j = 0; j < 4; ++j) os << (j ? ", " : "") << evaluate_at(r.at(i, j), at).to_string();
        os << "]\n";
      }
      std::cout << os.str();
      return 0;
    }
    if (*report) {
      const std::string text = report_input.empty() ? read_all(std::cin) : read_file(report_input);
      const Report r = parse_report_json(text);
      std::cout << emit_report(r, parse_report_format(report_format));
      return r.passed() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
