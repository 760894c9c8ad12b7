#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "yangian/currents/currents.hpp"
#include "yangian/evalrep/evalrep.hpp"
#include "yangian/hopf/coproduct.hpp"
#include "yangian/report.hpp"

namespace yangian {

/// Modes accepted by the expression parser and the window option.
inline constexpr ModeWindow kModeLimit{-32, 32};

struct SuiteConfig {
  int floor = -16;
  int cutoff = 3;
  int order = 4;
  ModeWindow window{-4, 4};
  std::uint64_t seed = 7;
  int points = 25;
  DeltaShift delta_shift = DeltaShift::minus;
  KMinusReading kminus_reading = KMinusReading::minus;

  /// Throws config-invalid.
  void validate() const;
  /// Sets one option from its text form; keys as in the config file.
  void set(const std::string& key, const std::string& value);
  nlohmann::ordered_json to_json() const;
};

/// "a..b".
ModeWindow parse_window(const std::string& text);

/// Flat "key = value" lines; '#' starts a comment.
void load_config(SuiteConfig& cfg, const std::string& text);

/// expr := ['+'|'-'] term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := rational | generator | '(' expr ')'; generator := [efhk] '[' int ']'.
/// The result is not normal-ordered. Throws syntax-error or mode-out-of-window.
AlgebraElement parse_expression(const std::string& text, ModeWindow limit = kModeLimit);

const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws config-invalid for unknown names.
Report run_suite(const std::string& name, const SuiteConfig& cfg);

enum class ReportFormat { text, json };

ReportFormat parse_report_format(const std::string& s);
std::string emit_report(const Report& r, ReportFormat format);
Report parse_report_json(const std::string& text);

}  // namespace yangian
