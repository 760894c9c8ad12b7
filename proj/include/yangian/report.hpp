#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace yangian {

enum class Status { pass, fail, skipped };

const char* to_string(Status s);
Status parse_status(const std::string& s);

struct CheckRecord {
  std::string name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Status status = Status::pass;
  /// Residual term or offending point; always set for failures.
  std::string witness;
};

/// Outcome of a verifier: one record per check.
struct Report {
  std::string suite;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::vector<CheckRecord> checks;
  double elapsed_ms = 0;

  bool passed() const;
  std::size_t count(Status s) const;
  void add(std::string name, nlohmann::ordered_json params, bool ok, std::string witness = {});
  void skip(std::string name, nlohmann::ordered_json params, std::string reason);
  /// Appends the checks of another report, prefixing their names.
  void merge(const Report& other, const std::string& prefix = {});
  /// Sorts checks by name (stable) so output does not depend on evaluation order.
  void sort_checks();
};

}  // namespace yangian
