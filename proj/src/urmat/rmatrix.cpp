#include "yangian/urmat/rmatrix.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "yangian/error.hpp"

namespace yangian {

const char* to_string(RFactorKind k) {
  switch (k) {
    case RFactorKind::plus: return "plus";
    case RFactorKind::minus: return "minus";
    case RFactorKind::cartan1: return "cartan1";
    case RFactorKind::cartan2: return "cartan2";
  }
  return "?";
}

const char* to_string(CartanMode m) { return m == CartanMode::partial ? "partial" : "resummed"; }

CartanMode parse_cartan_mode(const std::string& s) {
  if (s == "partial") return CartanMode::partial;
  if (s == "resummed") return CartanMode::resummed;
  throw Error(ErrorCode::config_invalid, "unknown cartan mode '" + s + "'");
}

const char* to_string(QuasiTriangularCheck c) {
  switch (c) {
    case QuasiTriangularCheck::ybe: return "ybe";
    case QuasiTriangularCheck::coproduct_left: return "coproduct_left";
    case QuasiTriangularCheck::coproduct_right: return "coproduct_right";
  }
  return "?";
}

namespace {

const std::vector<FloorConstraint> leg2(int floor) { return {{leg_bit(1), floor}}; }

Scalar factorial_ratio(int hi, int lo) {
  Scalar r = 1;
  for (int i = lo + 1; i <= hi; ++i) r *= Scalar(i);
  return r;
}

/// ln(1 + sum_{p=1..P} s_p u^{-p}) for the plus current of class c; entry k is phi_k,
/// the coefficient of u^{-k-1}.
std::vector<AlgebraElement> plus_log(GenClass c, int count) {
  const int P = count;
  std::vector<AlgebraElement> s(P + 1), power(P + 1), log(P + 1);
  for (int p = 1; p <= P; ++p) s[p] = AlgebraElement(Generator{c, p - 1});
  power = s;
  for (int r = 1; r <= P; ++r) {
    const Scalar w = Scalar(r % 2 == 1 ? 1 : -1, r);
    for (int p = r; p <= P; ++p) log[p] += power[p] * w;
    std::vector<AlgebraElement> next(P + 1);
    for (int p = r; p <= P; ++p)
      for (int q = 1; p + q <= P; ++q) next[p + q] += multiply(power[p], s[q]);
    power = std::move(next);
  }
  std::vector<AlgebraElement> phi(count);
  for (int k = 0; k < count; ++k) phi[k] = log[k + 1];
  return phi;
}

/// ln(1 - sum_j x_{-j-1} v^j) for the minus current of class c; entry j is the
/// coefficient of v^j, exact at mode >= floor.
std::vector<AlgebraElement> minus_log(GenClass c, int count, int floor) {
  const int J = count - 1;
  std::vector<AlgebraElement> s(J + 1), power, log(J + 1);
  for (int j = 0; j <= J; ++j) {
    s[j] = -AlgebraElement(Generator{c, -j - 1});
    s[j].set_floor(floor, true);
  }
  for (auto& l : log) l.set_floor(floor, true);
  power = s;
  for (int r = 1; r <= -floor; ++r) {
    const Scalar w = Scalar(r % 2 == 1 ? 1 : -1, r);
    for (int j = 0; j <= J; ++j) log[j] += power[j] * w;
    std::vector<AlgebraElement> next(J + 1);
    for (auto& x : next) x.set_floor(floor, true);
    for (int j = 0; j <= J; ++j)
      for (int i = 0; i + j <= J; ++i) next[i + j] += multiply(power[j], s[i], floor);
    power = std::move(next);
  }
  return log;
}

TensorElement cartan_exponent(const RFactorSpec& spec, int floor) {
  const bool first = spec.kind == RFactorKind::cartan1;
  const GenClass plus_cls = first ? GenClass::H : GenClass::K;
  const GenClass minus_cls = first ? GenClass::K : GenClass::H;
  const int count = std::min(-floor, spec.order + 1);
  TensorElement t(2);
  t.impose_leg_floor(1, floor);
  if (count <= 0) return t;
  const auto phi = plus_log(plus_cls, count);
  const auto beta = minus_log(minus_cls, count, floor);
  const int J = count - 1;
  if (spec.cartan == CartanMode::resummed) {
    const auto c = cartan_resummation_coefficients(J / 2 + 1);
    for (int k = 0; k <= J; ++k) {
      AlgebraElement g;
      g.set_floor(floor, true);
      for (int p = 0; k + 2 * p <= J; ++p) g += beta[k + 2 * p] * (c[p] * factorial_ratio(k + 2 * p, k));
      t += TensorElement::pure({phi[k], g});
    }
    return t;
  }
  for (int n = 0; n <= spec.cutoff; ++n) {
    const Scalar shift(2 * n + 1);
    for (int k = 1; k <= J; ++k) {
      AlgebraElement g;
      g.set_floor(floor, true);
      for (int j = k; j <= J; ++j) g += beta[j] * (Scalar(binomial(j, k)) * shift.pow(j - k));
      t += TensorElement::pure({phi[k - 1] * Scalar(k), g});
    }
  }
  return t;
}

TensorElement nilpotent_product(const RFactorSpec& spec, int floor, int minus_sign) {
  const bool plus = spec.kind == RFactorKind::plus;
  TensorElement r = TensorElement::unit(2);
  r.impose_leg_floor(1, floor);
  for (int i = 0; i <= spec.cutoff; ++i) {
    const int n = plus ? i : spec.cutoff - i;
    if (-n - 1 < floor) continue;
    TensorElement factor = TensorElement::unit(2);
    if (plus)
      factor.add_term({{e(n)}, {f(-n - 1)}}, Scalar(-1));
    else
      factor.add_term({{f(n)}, {e(-n - 1)}}, Scalar(minus_sign));
    r = tensor_multiply(r, factor, leg2(floor));
  }
  return r;
}

TensorElement embed(const TensorElement& t, int legs, const std::vector<int>& slots) {
  TensorElement out(legs);
  for (const auto& [key, c] : t.terms()) {
    TensorElement::Key k(legs);
    for (std::size_t i = 0; i < key.size(); ++i) k[slots[i]] = key[i];
    out.add_term(k, c);
  }
  for (const auto& fc : t.constraints()) {
    unsigned mask = 0;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (fc.legs & leg_bit(static_cast<int>(i))) mask |= leg_bit(slots[i]);
    out.impose({mask, fc.floor});
  }
  return out;
}

struct Comparison {
  bool ok = true;
  std::size_t compared = 0;
  std::string witness;
};

Comparison compare(const TensorElement& a, const TensorElement& b) {
  std::vector<FloorConstraint> all = a.constraints();
  all.insert(all.end(), b.constraints().begin(), b.constraints().end());
  const auto ta = a.reliable_terms(all);
  const auto tb = b.reliable_terms(all);
  Comparison c;
  std::map<TensorElement::Key, Scalar> diff = ta;
  for (const auto& [k, v] : tb) diff[k] -= v;
  std::set<TensorElement::Key> keys;
  for (const auto& [k, v] : ta) keys.insert(k);
  for (const auto& [k, v] : tb) keys.insert(k);
  c.compared = keys.size();
  for (const auto& [k, v] : diff) {
    if (v.is_zero()) continue;
    c.ok = false;
    TensorElement w = TensorElement::from_key(k, v);
    c.witness = "residual " + w.to_string();
    break;
  }
  return c;
}

}  // namespace

std::vector<Scalar> cartan_resummation_coefficients(int count) {
  // sinh(t)/t = sum_p t^{2p}/(2p+1)!, inverted term by term.
  std::vector<Scalar> s(count), q(count);
  Scalar fact = 1;
  for (int p = 0; p < count; ++p) {
    if (p > 0) fact *= Scalar(2 * p) * Scalar(2 * p + 1);
    s[p] = Scalar(1) / fact;
  }
  for (int p = 0; p < count; ++p) {
    q[p] = p == 0 ? Scalar(1) : Scalar(0);
    for (int i = 1; i <= p; ++i) q[p] -= s[i] * q[p - i];
  }
  for (auto& x : q) x = x * Scalar(-1, 2);
  return q;
}

int factor_exact_floor(const RFactorSpec& spec) {
  switch (spec.kind) {
    case RFactorKind::plus:
    case RFactorKind::minus: return -spec.cutoff - 1;
    case RFactorKind::cartan1:
    case RFactorKind::cartan2: return -spec.order - 1;
  }
  return kNoFloor;
}

TensorElement tensor_exp(const TensorElement& t, int leg2_floor) {
  TensorElement result = TensorElement::unit(t.legs());
  result.impose_leg_floor(1, leg2_floor);
  TensorElement term = result;
  for (int r = 1;; ++r) {
    term = tensor_multiply(term, t, leg2(leg2_floor)) * Scalar(1, r);
    if (term.is_zero()) break;
    result += term;
    if (r > -leg2_floor + 1)
      throw Error(ErrorCode::floor_too_shallow, "exponent does not lower the leg-2 mode");
  }
  return result;
}

TensorElement residue_tensor(const CurrentSeries& a, const CurrentSeries& b) {
  TensorElement t(2);
  for (const auto& [k, ak] : a.coefficients) {
    if (k < 0) continue;
    auto it = b.coefficients.find(-k - 1);
    if (it == b.coefficients.end()) continue;
    t += TensorElement::pure({ak, it->second});
  }
  return t;
}

TensorElement build_R_factor(const RFactorSpec& spec, int floor, int minus_sign) {
  if (spec.cutoff < 0 || spec.order < 0)
    throw Error(ErrorCode::config_invalid, "cutoffs must be non-negative");
  const int d = std::max(floor, factor_exact_floor(spec));
  if (spec.kind == RFactorKind::plus || spec.kind == RFactorKind::minus) {
    TensorElement r = nilpotent_product(spec, floor, minus_sign);
    r.impose_leg_floor(1, d);
    return r;
  }
  TensorElement r = tensor_exp(cartan_exponent(spec, d), d);
  return r;
}

TensorElement assemble_R(int cutoff, int order, int floor, const RConvention& conv) {
  RFactorSpec spec;
  spec.cutoff = cutoff;
  spec.order = order;
  spec.cartan = conv.cartan;
  const int d = std::max({floor, -cutoff - 1, -order - 1});
  TensorElement r = TensorElement::unit(2);
  r.impose_leg_floor(1, d);
  for (RFactorKind k : {RFactorKind::plus, RFactorKind::cartan1, RFactorKind::cartan2, RFactorKind::minus}) {
    RFactorSpec s = spec;
    s.kind = k;
    if ((k == RFactorKind::cartan1 || k == RFactorKind::cartan2) && conv.partial_cutoff >= 0)
      s.cutoff = conv.partial_cutoff;
    r = tensor_multiply(r, build_R_factor(s, d, conv.minus_sign), leg2(d));
  }
  return r;
}

TensorElement graded_flip(const TensorElement& t) {
  if (t.legs() != 2) throw Error(ErrorCode::leg_mismatch, "graded flip needs two legs");
  TensorElement out(2);
  for (const auto& [k, c] : t.terms())
    out.add_term({k[1], k[0]}, c * Scalar(sign_of(parity(k[0]), parity(k[1]))));
  for (const auto& fc : t.constraints()) {
    unsigned mask = ((fc.legs & 1u) << 1) | ((fc.legs & 2u) >> 1);
    out.impose({mask, fc.floor});
  }
  return out;
}

TensorElement tensor_inverse(const TensorElement& t, int leg, int floor) {
  const TensorElement one = TensorElement::unit(t.legs());
  const TensorElement q = one - t;
  const std::vector<FloorConstraint> fl{{leg_bit(leg), floor}};
  if (q.coefficient(TensorElement::Key(t.legs())) != Scalar(0))
    throw Error(ErrorCode::non_unit_leading, "leading term is not the unit");
  TensorElement result = one;
  result.impose(fl[0]);
  TensorElement term = result;
  for (int j = 1;; ++j) {
    term = tensor_multiply(term, q, fl);
    if (term.is_zero()) break;
    result += term;
    if (j > -floor + 1)
      throw Error(ErrorCode::floor_too_shallow, "series does not lower the mode of the leg");
  }
  return result;
}

Report verify_quasi_triangular(QuasiTriangularCheck which, int cutoff, int order_m, int order,
                               const RConvention& conv, const DeltaConvention& delta) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.suite = "quasi_triangular";
  const int d = std::max({-order, -cutoff - 1, -order_m - 1});
  nlohmann::ordered_json params{{"check", to_string(which)}, {"N", cutoff}, {"M", order_m},
                                {"order", order}, {"floor", d},
                                {"cartan", to_string(conv.cartan)}, {"minus_sign", conv.minus_sign}};
  const TensorElement r = assemble_R(cutoff, order_m, d, conv);
  TensorElement lhs(3), rhs(3);
  switch (which) {
    case QuasiTriangularCheck::coproduct_left:
      lhs = apply_coproduct(r, 0, {{leg_bit(2), d}}, delta);
      rhs = tensor_multiply(embed(r, 3, {0, 2}), embed(r, 3, {1, 2}), {{leg_bit(2), d}});
      break;
    case QuasiTriangularCheck::coproduct_right:
      lhs = apply_coproduct(r, 1, {{leg_bit(1) | leg_bit(2), d}}, delta);
      rhs = tensor_multiply(embed(r, 3, {0, 2}), embed(r, 3, {0, 1}),
                            {{leg_bit(1) | leg_bit(2), d}});
      break;
    case QuasiTriangularCheck::ybe: {
      const auto r12 = embed(r, 3, {0, 1});
      const auto r13 = embed(r, 3, {0, 2});
      const auto r23 = embed(r, 3, {1, 2});
      const std::vector<FloorConstraint> fl{{leg_bit(2), d}};
      lhs = tensor_multiply(tensor_multiply(r12, r13, fl), r23, fl);
      rhs = tensor_multiply(tensor_multiply(r23, r13, fl), r12, fl);
      break;
    }
  }
  const Comparison c = compare(lhs, rhs);
  params["compared_terms"] = c.compared;
  rep.add(to_string(which), params, c.ok, c.witness);
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace yangian
