#include "yangian/exactmath/rational_function.hpp"

#include <sstream>

#include "yangian/error.hpp"

namespace yangian {

RationalFunction::RationalFunction(const Scalar& c)
    : num_(c.numerator()), den_(c.denominator()) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::division_by_zero, "zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (!(den_.is_constant() && den_.constant_term() == 1)) {
    Polynomial g = gcd(num_, den_);
    if (!(g.is_constant() && g.constant_term() == 1)) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
  }
  if (den_.leading_coefficient() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Scalar RationalFunction::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::not_scalar, "rational function is not constant");
  return Scalar(mpq_class(num_.constant_term(), den_.constant_term()));
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.invert(); }

RationalFunction RationalFunction::invert() const {
  if (is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return invert().pow(-e);
  RationalFunction r;
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  return r;
}

RationalFunction RationalFunction::substitute(Var v, const RationalFunction& r) const {
  // Homogenize: p(v -> a/b) = P(a, b) / b^deg.
  auto sub = [&](const Polynomial& p, int deg) {
    Polynomial out;
    for (int d = 0; d <= p.degree(v); ++d) {
      Polynomial c = p.coefficient(v, d);
      if (c.is_zero()) continue;
      out += c * r.numerator().pow(d) * r.denominator().pow(deg - d);
    }
    return out;
  };
  const int dn = num_.degree(v), dd = den_.degree(v);
  const int deg = std::max(dn, dd);
  Polynomial n = sub(num_, deg), d = sub(den_, deg);
  return RationalFunction(std::move(n), std::move(d));
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string();
  auto wrap = [](const Polynomial& p) {
    std::string s = p.to_string();
    return p.terms().size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

RationalFunction rf_arith(RfOp op, const RationalFunction& a, const RationalFunction& b) {
  switch (op) {
    case RfOp::add: return a + b;
    case RfOp::mul: return a * b;
    case RfOp::invert: return a.invert();
  }
  return a;
}

Scalar evaluate_at(const RationalFunction& f, const Assignment& at) {
  Scalar d = f.denominator().evaluate(at);
  if (d.is_zero()) throw Error(ErrorCode::pole_at_point, "denominator vanishes at the point");
  return f.numerator().evaluate(at) / d;
}

RationalFunction RegionSeries::coefficient(int exponent) const {
  auto it = coefficients.find(exponent);
  return it == coefficients.end() ? RationalFunction() : it->second;
}

RationalFunction RegionSeries::truncated_sum() const {
  RationalFunction s;
  const RationalFunction t = RationalFunction::variable(var);
  for (const auto& [e, c] : coefficients) s += c * t.pow(e);
  return s;
}

std::string RegionSeries::to_string() const {
  if (coefficients.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](int e, const RationalFunction& c) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (e != 0) os << "*" << var_name(var) << "^" << e;
  };
  if (region == Region::at_infinity) {
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) emit(it->first, it->second);
  } else {
    for (const auto& [e, c] : coefficients) emit(e, c);
  }
  return os.str();
}

RegionSeries series_expand(const RationalFunction& f, Var var, Region region, int order) {
  RegionSeries s;
  s.var = var;
  s.region = region;
  s.order = order;
  const Polynomial& n = f.numerator();
  const Polynomial& d = f.denominator();
  const int dn = n.degree(var), dd = d.degree(var);
  // Coefficient lists in the local parameter t (t = var or 1/var).
  std::vector<RationalFunction> nc, dc;
  if (region == Region::at_zero) {
    for (int i = 0; i <= dn; ++i) nc.emplace_back(n.coefficient(var, i));
    for (int i = 0; i <= dd; ++i) dc.emplace_back(d.coefficient(var, i));
  } else {
    for (int i = 0; i <= dn; ++i) nc.emplace_back(n.coefficient(var, dn - i));
    for (int i = 0; i <= dd; ++i) dc.emplace_back(d.coefficient(var, dd - i));
  }
  if (dc[0].is_zero())
    throw Error(ErrorCode::unsupported_region,
                std::string("denominator vanishes at the expansion point of ") + var_name(var));
  const RationalFunction inv0 = dc[0].invert();
  // f = t^shift * sum_k c_k t^k, exponent of var = sign * (shift + k).
  const int shift = region == Region::at_zero ? 0 : dd - dn;
  const int sgn = region == Region::at_zero ? 1 : -1;
  const int kmax = order - shift;
  std::vector<RationalFunction> c;
  for (int k = 0; k <= kmax; ++k) {
    RationalFunction ck = k < static_cast<int>(nc.size()) ? nc[k] : RationalFunction();
    for (int j = 1; j <= k && j < static_cast<int>(dc.size()); ++j) ck -= dc[j] * c[k - j];
    ck *= inv0;
    c.push_back(ck);
    if (!ck.is_zero()) s.coefficients.emplace(sgn * (shift + k), ck);
  }
  return s;
}

}  // namespace yangian
