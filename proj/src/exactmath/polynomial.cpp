#include "yangian/exactmath/polynomial.hpp"

#include <sstream>
#include <utility>

#include "yangian/error.hpp"

namespace yangian {

namespace {

Polynomial subresultant_gcd(const Polynomial& a, const Polynomial& b);

constexpr const char* kVarNames[kNumVars] = {"u", "v", "x", "y", "w"};

int total(const Monomial& m) {
  int t = 0;
  for (int e : m) t += e;
  return t;
}

void add_term(Polynomial::Terms& terms, const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Polynomial normalize_sign(Polynomial p) {
  if (!p.is_zero() && p.leading_coefficient() < 0) return -p;
  return p;
}

Polynomial content_in(const Polynomial& p, Var v) {
  Polynomial g;
  for (int d = p.degree(v); d >= 0; --d) {
    Polynomial c = p.coefficient(v, d);
    if (!c.is_zero()) g = gcd(g, c);
    if (g.is_constant() && g.constant_term() == 1) break;
  }
  return g;
}

/// Pseudo-remainder of a by b in v with multiplier lc(b)^(deg a - deg b + 1).
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, Var v) {
  const int db = b.degree(v);
  const Polynomial lb = b.leading_coefficient_in(v);
  for (int d = a.degree(v); d >= db; --d) {
    Polynomial la = a.coefficient(v, d);
    a = lb * a;
    if (!la.is_zero()) a -= (la * b).times_var_power(v, d - db);
  }
  return a;
}

bool try_divide(const Polynomial& a, const Polynomial& b, Polynomial& q) {
  try {
    q = exact_divide(a, b);
    return true;
  } catch (const Error&) {
    return false;
  }
}

mpz_class max_norm(const Polynomial& p) {
  mpz_class m = 0;
  for (const auto& [mono, c] : p.terms())
    if (abs(c) > m) m = abs(c);
  return m;
}

Polynomial evaluate_var(const Polynomial& p, Var v, const mpz_class& at) {
  Polynomial r;
  const int i = static_cast<int>(v);
  for (const auto& [m, c] : p.terms()) {
    mpz_class t;
    mpz_pow_ui(t.get_mpz_t(), at.get_mpz_t(), static_cast<unsigned long>(m[i]));
    Monomial mm = m;
    mm[i] = 0;
    r += Polynomial::monomial(c * t, mm);
  }
  return r;
}

/// Heuristic gcd by evaluation at a large integer and xi-adic reconstruction.
/// Inputs must have unit integer content; returns false when inconclusive.
bool heuristic_gcd(const Polynomial& a, const Polynomial& b, Polynomial& out) {
  const int iv = std::max(a.main_var(), b.main_var());
  const Var v = static_cast<Var>(iv);
  mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Polynomial av = evaluate_var(a, v, xi), bv = evaluate_var(b, v, xi);
    if (!av.is_zero() && !bv.is_zero()) {
      Polynomial gamma = gcd(av, bv);
      Polynomial g;
      int power = 0;
      const mpz_class half = xi / 2;
      while (!gamma.is_zero()) {
        Polynomial digit;
        for (const auto& [m, c] : gamma.terms()) {
          mpz_class r;
          mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
          if (r > half) r -= xi;
          digit += Polynomial::monomial(r, m);
        }
        g += digit.times_var_power(v, power++);
        gamma -= digit;
        Polynomial next;
        for (const auto& [m, c] : gamma.terms()) next += Polynomial::monomial(c / xi, m);
        gamma = std::move(next);
      }
      if (!g.is_zero()) {
        mpz_class content = g.integer_content();
        Polynomial gp;
        for (const auto& [m, c] : g.terms()) gp += Polynomial::monomial(c / content, m);
        Polynomial q;
        if (try_divide(a, gp, q) && try_divide(b, gp, q)) {
          out = std::move(gp);
          return true;
        }
      }
    }
    xi = xi * 73794 / 27011;
  }
  return false;
}

Polynomial strip_content(const Polynomial& p, const mpz_class& c) {
  Polynomial r;
  for (const auto& [m, k] : p.terms()) r += Polynomial::monomial(k / c, m);
  return r;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  const mpz_class ca = a.integer_content(), cb = b.integer_content();
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return Polynomial(c);
  const Polynomial pa = strip_content(a, ca), pb = strip_content(b, cb);
  Polynomial g;
  if (!heuristic_gcd(pa, pb, g)) g = subresultant_gcd(pa, pb);
  g *= c;
  return normalize_sign(g);
}

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

Var parse_var(const std::string& name) {
  for (int i = 0; i < kNumVars; ++i)
    if (name == kVarNames[i]) return static_cast<Var>(i);
  throw Error(ErrorCode::syntax_error, "unknown variable '" + name + "'");
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  int ta = total(a), tb = total(b);
  if (ta != tb) return ta < tb;
  for (int i = kNumVars - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.emplace(Monomial{}, mpz_class(c));
}

Polynomial::Polynomial(const mpz_class& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(Var v) {
  Monomial m{};
  m[static_cast<int>(v)] = 1;
  return monomial(1, m);
}

Polynomial Polynomial::monomial(const mpz_class& c, const Monomial& m) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

mpz_class Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int Polynomial::degree(Var v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<int>(v)]);
  return d;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? 0 : total(terms_.rbegin()->first);
}

int Polynomial::main_var() const {
  for (int i = kNumVars - 1; i >= 0; --i)
    if (degree(static_cast<Var>(i)) > 0) return i;
  return -1;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw Error(ErrorCode::division_by_zero, "leading monomial of zero");
  return terms_.rbegin()->first;
}

const mpz_class& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorCode::division_by_zero, "leading coefficient of zero");
  return terms_.rbegin()->second;
}

Polynomial Polynomial::coefficient(Var v, int d) const {
  Polynomial r;
  const int i = static_cast<int>(v);
  for (const auto& [m, c] : terms_) {
    if (m[i] != d) continue;
    Monomial mm = m;
    mm[i] = 0;
    r.terms_.emplace(mm, c);
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(terms_, m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(terms_, m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (int i = 0; i < kNumVars; ++i) m[i] = ma[i] + mb[i];
      add_term(r.terms_, m, ca * cb);
    }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, k] : terms_) k *= c;
  return *this;
}

Polynomial Polynomial::pow(int e) const {
  Polynomial r(1), base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

Polynomial Polynomial::times_var_power(Var v, int e) const {
  Polynomial r;
  const int i = static_cast<int>(v);
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    mm[i] += e;
    r.terms_.emplace(mm, c);
  }
  return r;
}

Polynomial Polynomial::substitute(Var v, const Polynomial& p) const {
  const int i = static_cast<int>(v);
  Polynomial r;
  std::map<int, Polynomial> powers;
  powers[0] = Polynomial(1);
  for (const auto& [m, c] : terms_) {
    const int d = m[i];
    if (!powers.count(d)) powers[d] = p.pow(d);
    Monomial rest = m;
    rest[i] = 0;
    r += monomial(c, rest) * powers[d];
  }
  return r;
}

Scalar Polynomial::evaluate(const Assignment& at) const {
  mpq_class sum = 0;
  for (const auto& [m, c] : terms_) {
    mpq_class t = c;
    for (int i = 0; i < kNumVars; ++i) {
      if (m[i] == 0) continue;
      auto it = at.find(static_cast<Var>(i));
      if (it == at.end())
        throw Error(ErrorCode::config_invalid,
                    std::string("variable ") + kVarNames[i] + " not assigned");
      t *= it->second.pow(m[i]).value();
    }
    sum += t;
  }
  return Scalar(sum);
}

mpz_class Polynomial::integer_content() const {
  mpz_class g = 0;
  for (const auto& [m, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = total(m) == 0;
    bool need_star = false;
    if (a != 1 || unit) {
      os << a.get_str();
      need_star = true;
    }
    for (int i = kNumVars - 1; i >= 0; --i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << kVarNames[i];
      if (m[i] > 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

namespace {

Polynomial subresultant_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  const int iv = std::max(a.main_var(), b.main_var());
  if (iv < 0) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.constant_term().get_mpz_t(), b.constant_term().get_mpz_t());
    return Polynomial(g);
  }
  const Var v = static_cast<Var>(iv);
  if (!a.involves(v)) return gcd(a, content_in(b, v));
  if (!b.involves(v)) return gcd(content_in(a, v), b);


  Polynomial ca = content_in(a, v), cb = content_in(b, v);
  Polynomial pa = exact_divide(a, ca), pb = exact_divide(b, cb);
  Polynomial g = gcd(ca, cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  // Subresultant remainder sequence.
  Polynomial sg(1), sh(1);
  while (true) {
    const int delta = pa.degree(v) - pb.degree(v);
    Polynomial r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree(v) == 0) {
      pb = Polynomial(1);
      break;
    }
    pa = std::move(pb);
    pb = exact_divide(r, sg * sh.pow(delta));
    sg = pa.leading_coefficient_in(v);
    if (delta > 0) sh = exact_divide(sg.pow(delta), sh.pow(delta - 1));
  }
  pb = exact_divide(pb, content_in(pb, v));
  return normalize_sign(g * pb);
}

}  // namespace

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::division_by_zero, "polynomial division by zero");
  if (a.is_zero()) return a;
  if (b.is_constant()) {
    const mpz_class c = b.constant_term();
    Polynomial q;
    for (const auto& [m, k] : a.terms()) {
      if (!mpz_divisible_p(k.get_mpz_t(), c.get_mpz_t()))
        throw Error(ErrorCode::non_invertible, "inexact polynomial division");
      q += Polynomial::monomial(k / c, m);
    }
    return q;
  }
  const Var v = static_cast<Var>(b.main_var());
  const int db = b.degree(v);
  const Polynomial lb = b.leading_coefficient_in(v);
  Polynomial q, r = a;
  while (!r.is_zero()) {
    const int dr = r.degree(v);
    if (dr < db) throw Error(ErrorCode::non_invertible, "inexact polynomial division");
    Polynomial t = exact_divide(r.leading_coefficient_in(v), lb).times_var_power(v, dr - db);
    q += t;
    r -= t * b;
  }
  return q;
}

}  // namespace yangian
