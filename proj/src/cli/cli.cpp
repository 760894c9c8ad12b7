#include "yangian/cli/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <sstream>

#include "yangian/error.hpp"
#include "yangian/frt/frt.hpp"
#include "yangian/hopf/pairing.hpp"
#include "yangian/superalg/relations.hpp"
#include "yangian/urmat/rmatrix.hpp"

namespace yangian {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

int parse_int(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  int r = 0;
  try {
    r = std::stoi(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != v.size()) throw Error(ErrorCode::config_invalid, key + ": not an integer: '" + v + "'");
  return r;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// ---------------------------------------------------------------- expression parser

using RawTerms = std::map<Word, Scalar>;

RawTerms raw_product(const RawTerms& a, const RawTerms& b) {
  RawTerms r;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      Scalar& slot = r[w];
      slot += ca * cb;
      if (slot.is_zero()) r.erase(w);
    }
  return r;
}

void raw_add(RawTerms& acc, const RawTerms& x, int sign) {
  for (const auto& [w, c] : x) {
    Scalar& slot = acc[w];
    slot += sign < 0 ? -c : c;
    if (slot.is_zero()) acc.erase(w);
  }
}

class Parser {
 public:
  Parser(const std::string& text, ModeWindow limit) : s_(text), limit_(limit) {}

  RawTerms parse() {
    RawTerms r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::syntax_error, "at position " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RawTerms expr() {
    int sign = 1;
    if (accept('-'))
      sign = -1;
    else
      accept('+');
    RawTerms r;
    raw_add(r, term(), sign);
    for (;;) {
      if (accept('+'))
        raw_add(r, term(), 1);
      else if (accept('-'))
        raw_add(r, term(), -1);
      else
        return r;
    }
  }

  RawTerms term() {
    RawTerms r = factor();
    while (accept('*')) r = raw_product(r, factor());
    return r;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  RawTerms factor() {
    skip();
    if (pos_ >= s_.size()) fail("expected a factor");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RawTerms r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (pos_ < s_.size() && s_[pos_] == '.') fail("decimal numbers are not allowed");
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        const std::string den = digits();
        if (den.empty()) fail("expected a denominator");
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
        num += "/" + den;
      }
      const Scalar v = Scalar::parse(num);
      if (v.is_zero()) return {};
      return {{Word{}, v}};
    }
    GenClass cls;
    switch (c) {
      case 'e': cls = GenClass::E; break;
      case 'f': cls = GenClass::F; break;
      case 'h': cls = GenClass::H; break;
      case 'k': cls = GenClass::K; break;
      default: fail("unexpected '" + std::string(1, c) + "'");
    }
    ++pos_;
    if (!accept('[')) fail("expected '['");
    skip();
    const std::size_t mode_pos = pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    const std::string d = digits();
    if (d.empty()) fail("expected an integer mode");
    skip();
    if (pos_ < s_.size() && s_[pos_] != ']') fail("mode must be an integer");
    if (!accept(']')) fail("expected ']'");
    long mode = d.size() > 6 ? 1000000 : std::stol(d);
    if (neg) mode = -mode;
    if (mode < limit_.lo || mode > limit_.hi)
      throw Error(ErrorCode::mode_out_of_window, "mode " + std::to_string(mode) + " at position " +
                                                     std::to_string(mode_pos) + " is outside [" +
                                                     std::to_string(limit_.lo) + ", " + std::to_string(limit_.hi) + "]");
    return {{Word{Generator{cls, static_cast<int>(mode)}}, Scalar(1)}};
  }

  const std::string& s_;
  ModeWindow limit_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- suites

/// Floor at which R and the L operators are exact for the configured cutoffs.
int effective_floor(const SuiteConfig& c) { return std::max({c.floor, -c.cutoff - 1, -c.order - 1}); }

DeltaConvention delta(const SuiteConfig& c) {
  DeltaConvention d;
  d.shift = c.delta_shift;
  return d;
}

Report suite_relations(const SuiteConfig& c) { return verify_defining_relations(c.window.lo, c.window.hi, c.floor); }

Report suite_currents(const SuiteConfig& c) {
  Report r;
  for (auto id : {RelationId::HH, RelationId::HK, RelationId::KK, RelationId::KE, RelationId::KF, RelationId::EE,
                  RelationId::FF, RelationId::HE, RelationId::HF})
    r.merge(verify_current_relation(id, c.window, c.floor), std::string(to_string(id)) + ".");
  r.merge(verify_ef_delta(c.window, c.floor), "EF.");
  return r;
}

Report suite_hopf(const SuiteConfig& c) {
  Report r;
  r.merge(verify_coassociativity(3, c.order, delta(c)), "coassociativity.");
  r.merge(verify_homomorphism(3, c.order, delta(c)), "homomorphism.");
  return r;
}

Report suite_pairing(const SuiteConfig& c) {
  Report r;
  r.merge(verify_pairing_axiom(pairing_samples(c.points, 2, static_cast<unsigned>(c.seed)), c.order, delta(c)),
          "axiom.");
  r.merge(verify_pairing_table(6), "table.");
  return r;
}

Report suite_urmatrix(const SuiteConfig& c) {
  Report r;
  for (auto which :
       {QuasiTriangularCheck::coproduct_left, QuasiTriangularCheck::coproduct_right, QuasiTriangularCheck::ybe})
    r.merge(verify_quasi_triangular(which, c.cutoff, c.order, c.order, {}, delta(c)), std::string(to_string(which)) + ".");
  return r;
}

Report suite_rep(const SuiteConfig& c) { return verify_rep_relations(c.window.lo, c.window.hi); }

Report suite_gauss(const SuiteConfig& c) {
  Report r;
  r.merge(verify_telescoping(c.cutoff, c.order), "telescoping.");
  const Report consistency = verify_gauss_consistency(c.cutoff, c.order);
  r.merge(consistency, "consistency.");
  const std::string resolved = consistency.config.value("kminus_reading", "unresolved");
  const std::string configured = to_string(c.kminus_reading);
  r.config["kminus_reading"] = resolved;
  r.add("kminus_reading_configured", {{"configured", configured}, {"resolved", resolved}}, configured == resolved,
        "configured reading " + configured + " disagrees with the Gauss factors of L^- (" + resolved + ")");
  return r;
}

Report suite_ybe(const SuiteConfig& c) {
  Report r;
  r.merge(verify_graded_ybe(c.points, c.seed), "graded.");
  const RationalFunction z = RationalFunction::variable(Var::x) - RationalFunction::variable(Var::y);
  try {
    const RationalFunction u = unitarity_scalar(z);
    r.add("unitarity", {{"c", u.to_string()}}, u == RationalFunction(1), "c(z) = " + u.to_string());
  } catch (const Error& e) {
    r.add("unitarity", {}, false, e.what());
  }
  r.add("parity_conservation", {}, conserves_parity(rbar_matrix()), "entry mixing parities is nonzero");
  r.merge(verify_scalar_recursion(50), "scalar.");
  return r;
}

Report suite_rll(const SuiteConfig& c) {
  RllOptions opt;
  opt.cutoff = c.cutoff;
  opt.order_m = c.order;
  opt.floor = c.floor;
  const int order = std::min(c.order, -effective_floor(c) - 1);
  Report r;
  for (auto pair : {RllPair::minus_minus, RllPair::plus_plus, RllPair::minus_plus})
    r.merge(verify_rll(pair, order, opt), std::string(to_string(pair)) + ".");
  r.merge(verify_L_coproduct(c.order, delta(c)), "coproduct.");
  return r;
}

Report suite_dingfrenkel(const SuiteConfig& c) {
  const int d = effective_floor(c);
  Report r = ding_frenkel_check(c.cutoff, c.order, 1, d);
  return r;
}

using SuiteFn = Report (*)(const SuiteConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s{
      {"relations", suite_relations}, {"currents", suite_currents}, {"hopf", suite_hopf},
      {"pairing", suite_pairing},     {"urmatrix", suite_urmatrix}, {"rep", suite_rep},
      {"gauss", suite_gauss},         {"ybe", suite_ybe},           {"rll", suite_rll},
      {"dingfrenkel", suite_dingfrenkel}};
  return s;
}

std::string params_text(const nlohmann::ordered_json& p) {
  if (p.empty()) return {};
  std::string s;
  for (const auto& [k, v] : p.items()) {
    if (!s.empty()) s += " ";
    s += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------- config

void SuiteConfig::validate() const {
  auto bad = [](const std::string& m) { throw Error(ErrorCode::config_invalid, m); };
  if (window.lo > window.hi) bad("window is empty");
  if (window.lo < kModeLimit.lo || window.hi > kModeLimit.hi) bad("window must lie in [-32, 32]");
  if (cutoff < 0 || cutoff > 64) bad("cutoff must lie in [0, 64]");
  if (order < 0 || order > 64) bad("order must lie in [0, 64]");
  if (floor > 0 || floor < -256) bad("floor must lie in [-256, 0]");
  if (points < 0 || points > 100000) bad("points must lie in [0, 100000]");
}

void SuiteConfig::set(const std::string& key, const std::string& value) {
  const std::string k = [&] {
    std::string t = key;
    std::replace(t.begin(), t.end(), '-', '_');
    return t;
  }();
  if (k == "floor")
    floor = parse_int(k, value);
  else if (k == "cutoff")
    cutoff = parse_int(k, value);
  else if (k == "order")
    order = parse_int(k, value);
  else if (k == "window")
    window = parse_window(value);
  else if (k == "points")
    points = parse_int(k, value);
  else if (k == "seed")
    seed = static_cast<std::uint64_t>(parse_int(k, value));
  else if (k == "delta_shift")
    delta_shift = parse_delta_shift(value);
  else if (k == "kminus_reading")
    kminus_reading = parse_kminus_reading(value);
  else
    throw Error(ErrorCode::config_invalid, "unknown option '" + key + "'");
}

nlohmann::ordered_json SuiteConfig::to_json() const {
  return {{"floor", floor},
          {"cutoff", cutoff},
          {"order", order},
          {"window", {window.lo, window.hi}},
          {"seed", seed},
          {"points", points},
          {"delta_shift", to_string(delta_shift)},
          {"kminus_reading", to_string(kminus_reading)}};
}

ModeWindow parse_window(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw Error(ErrorCode::config_invalid, "window must look like a..b");
  ModeWindow w{parse_int("window", trim(text.substr(0, dots))), parse_int("window", trim(text.substr(dots + 2)))};
  return w;
}

void load_config(SuiteConfig& cfg, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::config_invalid, "line " + std::to_string(n) + ": expected key = value");
    cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

AlgebraElement parse_expression(const std::string& text, ModeWindow limit) {
  AlgebraElement r;
  for (const auto& [w, c] : Parser(text, limit).parse()) r += AlgebraElement::from_word(w, c);
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suites()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

Report run_suite(const std::string& name, const SuiteConfig& cfg) {
  cfg.validate();
  const auto start = Clock::now();
  Report r;
  if (name == "all") {
    for (const auto& [n, fn] : suites()) {
      const Report sub = fn(cfg);
      r.merge(sub, n + ".");
      if (!sub.config.empty()) r.config["suites"][n] = sub.config;
    }
  } else {
    const auto it = std::find_if(suites().begin(), suites().end(), [&](const auto& s) { return s.first == name; });
    if (it == suites().end()) throw Error(ErrorCode::config_invalid, "unknown suite '" + name + "'");
    r = it->second(cfg);
  }
  nlohmann::ordered_json config = cfg.to_json();
  for (const auto& [k, v] : r.config.items()) {
    if (!config.contains(k))
      config[k] = v;
    else if (config[k] != v)
      config["effective"][k] = v;
  }
  r.suite = name;
  r.config = std::move(config);
  r.sort_checks();
  r.elapsed_ms = ms_since(start);
  return r;
}

// ---------------------------------------------------------------- reports

ReportFormat parse_report_format(const std::string& s) {
  if (s == "text") return ReportFormat::text;
  if (s == "json") return ReportFormat::json;
  throw Error(ErrorCode::config_invalid, "format must be text or json, got '" + s + "'");
}

std::string emit_report(const Report& r, ReportFormat format) {
  if (format == ReportFormat::json) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["config"] = r.config;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
      nlohmann::ordered_json cj{{"name", c.name}, {"params", c.params}, {"status", to_string(c.status)}};
      if (c.status == Status::fail || !c.witness.empty()) cj["witness"] = c.witness;
      j["checks"].push_back(std::move(cj));
    }
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  const std::size_t pass = r.count(Status::pass), fail = r.count(Status::fail), skip = r.count(Status::skipped);
  os << "suite " << r.suite << ": " << (fail == 0 ? "PASS" : "FAIL") << " (" << pass << " passed, " << fail
     << " failed, " << skip << " skipped, " << static_cast<long>(r.elapsed_ms) << " ms)\n";
  os << "config " << params_text(r.config) << "\n";
  for (const auto& c : r.checks) {
    os << (c.status == Status::pass ? "  pass " : c.status == Status::fail ? "  FAIL " : "  skip ") << c.name;
    const std::string p = params_text(c.params);
    if (!p.empty()) os << "  {" << p << "}";
    if (c.status != Status::pass && !c.witness.empty()) os << "\n       witness: " << c.witness;
    os << "\n";
  }
  return os.str();
}

Report parse_report_json(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::syntax_error, std::string("report is not valid json: ") + e.what());
  }
  Report r;
  try {
    r.suite = j.at("suite").get<std::string>();
    r.config = j.at("config");
    for (const auto& cj : j.at("checks")) {
      CheckRecord c;
      c.name = cj.at("name").get<std::string>();
      c.params = cj.value("params", nlohmann::ordered_json::object());
      c.status = parse_status(cj.at("status").get<std::string>());
      c.witness = cj.value("witness", "");
      r.checks.push_back(std::move(c));
    }
    r.elapsed_ms = j.value("elapsed_ms", 0.0);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::syntax_error, std::string("report does not match the schema: ") + e.what());
  }
  return r;
}

}  // namespace yangian
