#include "yangian/evalrep/evalrep.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "yangian/error.hpp"
#include "yangian/superalg/relations.hpp"

namespace yangian {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

RationalFunction x_power(int n) {
  const Polynomial x = Polynomial::variable(Var::x);
  return n >= 0 ? RationalFunction(x.pow(n)) : RationalFunction(Polynomial(1), x.pow(-n));
}

/// Constant part of rho_x(g) = x^mode * M(g).
std::array<int, 4> rho_shape(GenClass c) {
  switch (c) {
    case GenClass::E: return {0, 0, 1, 0};
    case GenClass::F: return {0, 1, 0, 0};
    case GenClass::H: return {1, 0, 0, -1};
    case GenClass::K: return {-1, 0, 0, -1};
  }
  return {};
}

std::array<Scalar, 4> shape_of_word(const Word& w) {
  std::array<Scalar, 4> m{1, 0, 0, 1};
  for (const auto& g : w) {
    const auto s = rho_shape(g.cls);
    std::array<Scalar, 4> r{m[0] * s[0] + m[1] * s[2], m[0] * s[1] + m[1] * s[3],
                            m[2] * s[0] + m[3] * s[2], m[2] * s[1] + m[3] * s[3]};
    m = r;
  }
  return m;
}

/// Sign turning the coefficient form of an End(V) (x) A element into operator form.
int operator_sign(int i, int j) {
  const int pi = static_cast<int>(index_parity(i)), pj = static_cast<int>(index_parity(j));
  return (pj * (pi + pj)) % 2 == 0 ? 1 : -1;
}

int max_exponent(const SpectralSeries& s) { return s.terms.empty() ? kNoFloor : s.terms.rbegin()->first; }

bool is_plus_sign(LSign s) { return s == LSign::plus; }

}  // namespace

// ---------------------------------------------------------------- RepMatrix

RepMatrix RepMatrix::identity() {
  RepMatrix m;
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  return m;
}

bool RepMatrix::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const RationalFunction& r) { return r.is_zero(); });
}

RepMatrix& RepMatrix::operator+=(const RepMatrix& o) {
  for (int i = 0; i < 4; ++i) entries[i] += o.entries[i];
  return *this;
}

RepMatrix& RepMatrix::operator*=(const RationalFunction& c) {
  for (auto& e : entries) e *= c;
  return *this;
}

RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) {
  RepMatrix r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.at(i, j) = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
  return r;
}

std::string RepMatrix::to_string() const {
  std::ostringstream os;
  os << "[[" << at(0, 0).to_string() << ", " << at(0, 1).to_string() << "], [" << at(1, 0).to_string()
     << ", " << at(1, 1).to_string() << "]]";
  return os.str();
}

RepMatrix rho_matrix(const Generator& g) {
  RepMatrix m;
  const auto s = rho_shape(g.cls);
  const RationalFunction p = x_power(g.mode);
  for (int i = 0; i < 4; ++i)
    if (s[i] != 0) m.entries[i] = p * RationalFunction(s[i]);
  return m;
}

RepMatrix rho_matrix(const AlgebraElement& a) {
  RepMatrix sum;
  for (const auto& [w, c] : a.terms()) {
    RepMatrix m = RepMatrix::identity();
    for (const auto& g : w) m = m * rho_matrix(g);
    m *= RationalFunction(c);
    sum += m;
  }
  return sum;
}

Report verify_rep_relations(int lo, int hi) {
  const auto start = Clock::now();
  Report r;
  r.suite = "rep";
  r.config = {{"window", {lo, hi}}};
  for (const auto& rel : defining_relations(lo, hi)) {
    const RepMatrix m = rho_matrix(rel.raw);
    r.add(rel.name(), {{"m", rel.m}, {"n", rel.n}}, m.is_zero(), m.to_string());
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

// ---------------------------------------------------------------- SpectralSeries

SpectralSeries SpectralSeries::constant(const AlgebraElement& c, int min_exponent, int floor) {
  SpectralSeries s;
  s.min_exponent = min_exponent;
  s.floor = floor;
  s.add(0, c);
  return s;
}

AlgebraElement SpectralSeries::coefficient(int p) const {
  auto it = terms.find(p);
  AlgebraElement c = it == terms.end() ? AlgebraElement() : it->second;
  if (floor > kNoFloor) c.set_floor(std::max(floor, c.floor()), true);
  return c;
}

void SpectralSeries::add(int p, const AlgebraElement& c) {
  if (p < min_exponent) return;
  auto& slot = terms[p];
  slot += c;
  if (floor > kNoFloor) slot.set_floor(std::max(floor, slot.floor()), true);
  if (slot.is_zero()) terms.erase(p);
}

SpectralSeries SpectralSeries::operator-() const {
  SpectralSeries r = *this;
  for (auto& [p, c] : r.terms) c = -c;
  return r;
}

SpectralSeries& SpectralSeries::operator+=(const SpectralSeries& o) {
  min_exponent = std::max(min_exponent, o.min_exponent);
  floor = std::max(floor, o.floor);
  for (auto it = terms.begin(); it != terms.end();)
    it = it->first < min_exponent ? terms.erase(it) : std::next(it);
  for (const auto& [p, c] : o.terms) add(p, c);
  if (floor > kNoFloor)
    for (auto it = terms.begin(); it != terms.end();) {
      it->second.set_floor(std::max(floor, it->second.floor()), true);
      it = it->second.is_zero() ? terms.erase(it) : std::next(it);
    }
  return *this;
}

SpectralSeries& SpectralSeries::operator-=(const SpectralSeries& o) { return *this += -o; }

SpectralSeries operator*(const SpectralSeries& a, const SpectralSeries& b) {
  SpectralSeries r;
  r.floor = std::max(a.floor, b.floor);
  int lo = kNoFloor;
  if (a.min_exponent > kNoFloor && !b.terms.empty()) lo = std::max(lo, a.min_exponent + max_exponent(b));
  if (b.min_exponent > kNoFloor && !a.terms.empty()) lo = std::max(lo, b.min_exponent + max_exponent(a));
  if (a.min_exponent > kNoFloor && b.min_exponent > kNoFloor) lo = std::max(lo, std::min(a.min_exponent, b.min_exponent));
  r.min_exponent = lo;
  for (const auto& [p, ca] : a.terms)
    for (const auto& [q, cb] : b.terms) {
      if (p + q < lo) continue;
      r.add(p + q, multiply(ca, cb, r.floor));
    }
  return r;
}

bool operator==(const SpectralSeries& a, const SpectralSeries& b) {
  const int lo = std::max(a.min_exponent, b.min_exponent);
  const int fl = std::max(a.floor, b.floor);
  std::set<int> exps;
  for (const auto& [p, c] : a.terms) exps.insert(p);
  for (const auto& [p, c] : b.terms) exps.insert(p);
  for (int p : exps) {
    if (p < lo) continue;
    AlgebraElement x = a.coefficient(p), y = b.coefficient(p);
    if (fl > kNoFloor) {
      x.set_floor(std::max(fl, x.floor()), true);
      y.set_floor(std::max(fl, y.floor()), true);
    }
    if (!(x == y)) return false;
  }
  return true;
}

std::string SpectralSeries::to_string(char var) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")";
    if (it->first != 0) os << "*" << var << "^" << it->first;
  }
  return os.str();
}

SpectralSeries series_inverse(const SpectralSeries& a) {
  const SpectralSeries one = SpectralSeries::constant(AlgebraElement(Scalar(1)), a.min_exponent, a.floor);
  const SpectralSeries t = one - a;
  if (!t.coefficient(0).coefficient({}).is_zero())
    throw Error(ErrorCode::non_unit_leading, "series does not start with the unit");
  SpectralSeries result = one, term = one;
  for (int j = 1;; ++j) {
    term = term * t;
    if (term.terms.empty()) break;
    result += term;
    if (j > 400) throw Error(ErrorCode::floor_too_shallow, "geometric series does not terminate");
  }
  return result;
}

SpectralSeries series_shift(const SpectralSeries& a, int s) {
  SpectralSeries r;
  r.min_exponent = a.min_exponent;
  r.floor = a.floor;
  const Scalar sh(s);
  for (const auto& [p, c] : a.terms) {
    if (p >= 0) {
      for (int i = 0; i <= p; ++i) r.add(i, c * (Scalar(binomial(p, i)) * sh.pow(p - i)));
      continue;
    }
    if (s != 0 && a.min_exponent <= kNoFloor)
      throw Error(ErrorCode::floor_too_shallow, "shifting a negative power needs an exponent cutoff");
    for (int i = 0; p - i >= a.min_exponent; ++i) {
      const Scalar b = Scalar(binomial(i - p - 1, i)) * Scalar(i % 2 == 0 ? 1 : -1);
      r.add(p - i, c * (b * sh.pow(i)));
      if (s == 0) break;
    }
  }
  return r;
}

CurrentSeries to_current(const SpectralSeries& a, GenClass cls, CurrentSign sign) {
  CurrentSeries c;
  c.cls = cls;
  c.sign = sign;
  int lo = 0, hi = -1;
  for (const auto& [p, x] : a.terms) {
    const int idx = -p - 1;
    c.coefficients[idx] = x;
    lo = std::min(lo, idx);
    hi = std::max(hi, idx);
  }
  c.window = {lo, hi};
  return c;
}

// ---------------------------------------------------------------- L operators

const char* to_string(LSign s) { return s == LSign::plus ? "+" : "-"; }

LMatrix build_L(LSign sign, int cutoff, int order_m, int floor, const RConvention& conv) {
  const TensorElement r = assemble_R(cutoff, order_m, floor, conv);
  const int d = r.leg_floor(1);
  LMatrix l;
  l.sign = sign;
  l.floor = d;
  TensorElement t = r;
  if (is_plus_sign(sign)) t = tensor_inverse(graded_flip(r), 0, d);
  for (auto& e : l.entries) {
    if (is_plus_sign(sign))
      e.min_exponent = d;
    else
      e.floor = d;
  }
  for (const auto& [key, c] : t.terms()) {
    const auto shape = shape_of_word(key[0]);
    const int p = mode_sum(key[0]);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const Scalar& s = shape[2 * i + j];
        if (s.is_zero()) continue;
        l.at(i, j).add(p, AlgebraElement::from_word(key[1], c * s * Scalar(operator_sign(i, j))));
      }
  }
  return l;
}

GaussFactors gauss_decompose(const LMatrix& l) {
  GaussFactors g;
  g.k1 = l.at(0, 0);
  const SpectralSeries inv = series_inverse(g.k1);
  g.e_part = inv * l.at(0, 1);
  g.f_part = l.at(1, 0) * inv;
  g.k2 = l.at(1, 1) - l.at(1, 0) * inv * l.at(0, 1);
  return g;
}

LMatrix gauss_reassemble(const GaussFactors& g, LSign sign, int floor) {
  LMatrix l;
  l.sign = sign;
  l.floor = floor;
  l.at(0, 0) = g.k1;
  l.at(0, 1) = g.k1 * g.e_part;
  l.at(1, 0) = g.f_part * g.k1;
  l.at(1, 1) = g.f_part * g.k1 * g.e_part + g.k2;
  return l;
}

// ---------------------------------------------------------------- k-factors

const char* to_string(KMinusReading r) { return r == KMinusReading::minus ? "minus" : "printed"; }

KMinusReading parse_kminus_reading(const std::string& s) {
  if (s == "minus") return KMinusReading::minus;
  if (s == "printed" || s == "paper") return KMinusReading::printed;
  throw Error(ErrorCode::config_invalid, "unknown k-minus reading '" + s + "'");
}

SpectralSeries cartan_current(GenClass cls, LSign sign, int s, int order) {
  const Scalar sh(s);
  SpectralSeries r;
  if (is_plus_sign(sign)) {
    r.min_exponent = -order;
    r.add(0, AlgebraElement(Scalar(1)));
    for (int a = 0; a + 1 <= order; ++a)
      for (int i = 0; a + 1 + i <= order; ++i) {
        const Scalar b = Scalar(binomial(a + i, i)) * Scalar(i % 2 == 0 ? 1 : -1) * sh.pow(i);
        r.add(-a - 1 - i, AlgebraElement(Generator{cls, a}) * b);
      }
    return r;
  }
  r.floor = -order - 1;
  r.add(0, AlgebraElement(Scalar(1)));
  for (int j = 0; j <= order; ++j)
    for (int i = 0; i <= j; ++i)
      r.add(i, AlgebraElement(Generator{cls, -j - 1}) * (-Scalar(binomial(j, i)) * sh.pow(j - i)));
  return r;
}

SpectralSeries k_factor_products(LSign sign, KFactor which, int cutoff, int order, int s,
                                 KMinusReading reading) {
  const LSign cur = (sign == LSign::minus && reading == KMinusReading::printed) ? LSign::plus : sign;
  auto ratio = [&](GenClass c, int num, int den) {
    return cartan_current(c, cur, num + s, order) * series_inverse(cartan_current(c, cur, den + s, order));
  };
  SpectralSeries r = SpectralSeries::constant(AlgebraElement(Scalar(1)),
                                              is_plus_sign(cur) ? -order : kNoFloor,
                                              is_plus_sign(cur) ? kNoFloor : -order - 1);
  const bool k1 = which == KFactor::k1;
  for (int n = 0; n <= cutoff; ++n) {
    if (is_plus_sign(sign)) {
      r = r * (k1 ? ratio(GenClass::K, -2 * n - 2, -2 * n - 1) : ratio(GenClass::K, -2 * n, -2 * n - 1));
      r = r * ratio(GenClass::H, -2 * n, -2 * n - 1);
    } else {
      r = r * (k1 ? ratio(GenClass::K, 2 * n + 1, 2 * n) : ratio(GenClass::K, 2 * n + 1, 2 * n + 2));
      r = r * ratio(GenClass::H, 2 * n + 1, 2 * n + 2);
    }
  }
  return r;
}

Report verify_telescoping(int cutoff, int order) {
  const auto start = Clock::now();
  Report rep;
  rep.suite = "telescoping";
  rep.config = {{"N", cutoff}, {"order", order}};
  for (LSign sign : {LSign::plus, LSign::minus}) {
    const int far = is_plus_sign(sign) ? -(2 * cutoff + 2) : 2 * cutoff + 2;
    const auto k1 = k_factor_products(sign, KFactor::k1, cutoff, order);
    const auto k2 = k_factor_products(sign, KFactor::k2, cutoff, order);
    const auto k2_shift = k_factor_products(sign, KFactor::k2, cutoff, order, -1);
    const auto lhs_k = k2 * series_inverse(k1);
    const auto rhs_k = cartan_current(GenClass::K, sign, 0, order) *
                       series_inverse(cartan_current(GenClass::K, sign, far, order));
    const auto lhs_h = k1 * k2_shift;
    const auto rhs_h = cartan_current(GenClass::H, sign, 0, order) *
                       series_inverse(cartan_current(GenClass::H, sign, far, order));
    const nlohmann::ordered_json p{{"sign", to_string(sign)}, {"N", cutoff}, {"order", order}};
    const std::string tag = std::string("[") + to_string(sign) + "](N=" + std::to_string(cutoff) + ")";
    rep.add("k2/k1=K/K" + tag, p, lhs_k == rhs_k, (lhs_k - rhs_k).to_string());
    rep.add("k1*k2(x-1)=H/H" + tag, p, lhs_h == rhs_h, (lhs_h - rhs_h).to_string());
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

Report verify_gauss_consistency(int cutoff, int order) {
  const auto start = Clock::now();
  Report rep;
  rep.suite = "gauss";
  rep.config = {{"N", cutoff}, {"order", order}};
  RConvention conv;
  conv.cartan = CartanMode::partial;
  conv.partial_cutoff = cutoff;
  std::vector<std::string> matching;
  for (LSign sign : {LSign::plus, LSign::minus}) {
    const LMatrix l = build_L(sign, order, order, -order - 1, conv);
    const GaussFactors g = gauss_decompose(l);
    const LMatrix back = gauss_reassemble(g, sign, l.floor);
    const std::string tag = std::string("[") + to_string(sign) + "]";
    bool reassembled = true;
    for (int i = 0; i < 4; ++i) reassembled = reassembled && back.entries[i] == l.entries[i];
    rep.add("reassembly" + tag, {{"sign", to_string(sign)}}, reassembled, "lower*diag*upper differs from L");
    const LSign e_sign = sign;
    SpectralSeries e_cur, f_cur;
    if (is_plus_sign(sign)) {
      e_cur.min_exponent = f_cur.min_exponent = l.floor;
      for (int n = 0; -n - 1 >= l.floor; ++n) {
        e_cur.add(-n - 1, AlgebraElement(e(n)));
        f_cur.add(-n - 1, AlgebraElement(f(n)));
      }
    } else {
      e_cur.floor = f_cur.floor = l.floor;
      for (int j = 0; -j - 1 >= l.floor; ++j) {
        e_cur.add(j, -AlgebraElement(e(-j - 1)));
        f_cur.add(j, -AlgebraElement(f(-j - 1)));
      }
    }
    rep.add("E-part=E" + tag, {{"sign", to_string(e_sign)}}, g.e_part == e_cur, (g.e_part - e_cur).to_string());
    rep.add("F-part=F" + tag, {{"sign", to_string(e_sign)}}, g.f_part == f_cur, (g.f_part - f_cur).to_string());
    const std::vector<KMinusReading> readings =
        is_plus_sign(sign) ? std::vector<KMinusReading>{KMinusReading::minus}
                           : std::vector<KMinusReading>{KMinusReading::minus, KMinusReading::printed};
    for (KMinusReading rd : readings) {
      const auto k1 = k_factor_products(sign, KFactor::k1, cutoff, order, 0, rd);
      const auto k2 = k_factor_products(sign, KFactor::k2, cutoff, order, 0, rd);
      const bool ok1 = g.k1 == k1, ok2 = g.k2 == k2;
      if (is_plus_sign(sign)) {
        rep.add("k1=product" + tag, {{"sign", "+"}, {"N", cutoff}}, ok1, (g.k1 - k1).to_string());
        rep.add("k2=product" + tag, {{"sign", "+"}, {"N", cutoff}}, ok2, (g.k2 - k2).to_string());
      } else {
        rep.config["reading_" + std::string(to_string(rd))] = {{"k1", ok1}, {"k2", ok2}};
        if (ok1 && ok2) matching.push_back(to_string(rd));
      }
    }
  }
  rep.config["kminus_reading"] = matching.size() == 1 ? matching.front() : "unresolved";
  rep.add("kminus-reading-resolved", {{"matching", matching}}, matching.size() == 1,
          "readings matching L^-: " + std::to_string(matching.size()));
  rep.elapsed_ms = ms_since(start);
  return rep;
}

Report ding_frenkel_check(int cutoff, int order_m, int order, int floor) {
  const auto start = Clock::now();
  Report rep;
  rep.suite = "dingfrenkel";
  const LMatrix lp = build_L(LSign::plus, cutoff, order_m, floor);
  const LMatrix lm = build_L(LSign::minus, cutoff, order_m, floor);
  const int d = lm.floor;
  rep.config = {{"N", cutoff}, {"M", order_m}, {"order", order}, {"floor", d}};
  if (d > -2 * order - 1)
    throw Error(ErrorCode::floor_too_shallow,
                "relations at order " + std::to_string(order) + " need R exact at leg-2 mode " +
                    std::to_string(-2 * order - 1));

  struct Extracted {
    SpectralSeries e, f, h, k;
  };
  auto extract = [](const LMatrix& l) {
    const GaussFactors g = gauss_decompose(l);
    return Extracted{g.e_part, g.f_part, g.k1 * series_shift(g.k2, -1), series_inverse(g.k1) * g.k2};
  };
  const Extracted plus = extract(lp), minus = extract(lm);

  // Identification with the Drinfeld currents.
  const int po = -lp.floor;
  auto expected = [&](GenClass c, LSign s) {
    if (c == GenClass::H || c == GenClass::K) return cartan_current(c, s, 0, is_plus_sign(s) ? po : -d - 1);
    SpectralSeries r;
    if (is_plus_sign(s)) {
      r.min_exponent = -po;
      for (int n = 0; n < po; ++n) r.add(-n - 1, AlgebraElement(Generator{c, n}));
    } else {
      r.floor = d;
      for (int j = 0; -j - 1 >= d; ++j) r.add(j, -AlgebraElement(Generator{c, -j - 1}));
    }
    return r;
  };
  for (LSign s : {LSign::plus, LSign::minus}) {
    const Extracted& x = is_plus_sign(s) ? plus : minus;
    const std::pair<GenClass, const SpectralSeries*> items[] = {
        {GenClass::E, &x.e}, {GenClass::F, &x.f}, {GenClass::H, &x.h}, {GenClass::K, &x.k}};
    for (const auto& [c, ser] : items) {
      const SpectralSeries want = expected(c, s);
      rep.add(std::string("extracted-") + class_letter(c) + "[" + to_string(s) + "]",
              {{"sign", to_string(s)}}, *ser == want, (*ser - want).to_string());
    }
  }

  const CurrentProvider provider = [&](GenClass c, CurrentSign s, ModeWindow w) {
    auto pick = [&](const Extracted& x) -> const SpectralSeries& {
      switch (c) {
        case GenClass::E: return x.e;
        case GenClass::F: return x.f;
        case GenClass::H: return x.h;
        case GenClass::K: return x.k;
      }
      return x.e;
    };
    auto check = [&](int lo, int hi) {
      if (lo < d || hi > po - 1)
        throw Error(ErrorCode::mode_out_of_window, "extracted currents do not reach the requested modes");
    };
    CurrentSeries out;
    if (s == CurrentSign::full) {
      out = to_current(pick(plus) - pick(minus), c, s);
      check(w.lo, w.hi);
    } else {
      out = to_current(pick(s == CurrentSign::plus ? plus : minus), c, s);
      if (s == CurrentSign::plus) check(0, w.hi);
      else check(w.lo, -1);
    }
    for (auto it = out.coefficients.begin(); it != out.coefficients.end();)
      it = (it->first != -1 && !w.contains(it->first)) ? out.coefficients.erase(it) : std::next(it);
    out.window = w;
    return out;
  };
  const ModeWindow window{-order, order - 1};
  for (RelationId id : {RelationId::HH, RelationId::HK, RelationId::KK, RelationId::KE, RelationId::KF,
                        RelationId::EE, RelationId::FF, RelationId::HE, RelationId::HF})
    rep.merge(verify_current_relation(id, window, d, provider), "relation");
  rep.merge(verify_ef_delta(window, d, provider), "relation");

  const Report gauss = verify_gauss_consistency(std::min(cutoff, 2), std::min(order_m, 2));
  rep.merge(gauss, "gauss");
  rep.config["kminus_reading"] = gauss.config["kminus_reading"];
  rep.elapsed_ms = ms_since(start);
  return rep;
}

}  // namespace yangian
