#include "yangian/report.hpp"

#include <algorithm>

#include "yangian/error.hpp"

namespace yangian {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "skipped") return Status::skipped;
  throw Error(ErrorCode::syntax_error, "unknown status '" + s + "'");
}

bool Report::passed() const { return count(Status::fail) == 0; }

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& c) { return c.status == s; }));
}

void Report::add(std::string name, nlohmann::ordered_json params, bool ok, std::string witness) {
  CheckRecord r{std::move(name), std::move(params), ok ? Status::pass : Status::fail, {}};
  if (!ok) r.witness = witness.empty() ? "unspecified residual" : std::move(witness);
  checks.push_back(std::move(r));
}

void Report::skip(std::string name, nlohmann::ordered_json params, std::string reason) {
  checks.push_back({std::move(name), std::move(params), Status::skipped, std::move(reason)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    CheckRecord r = c;
    if (!prefix.empty()) r.name = prefix + "/" + r.name;
    checks.push_back(std::move(r));
  }
}

void Report::sort_checks() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
}

}  // namespace yangian
