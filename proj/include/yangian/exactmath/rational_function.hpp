#pragma once

#include <map>
#include <string>

#include "yangian/exactmath/polynomial.hpp"

namespace yangian {

/// Exact quotient of integer polynomials kept in canonical form: coprime parts,
/// denominator with positive leading coefficient, zero stored as 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Scalar& c);              // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable(Var v) { return RationalFunction(Polynomial::variable(v)); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant function.
  Scalar constant_value() const;
  bool involves(Var v) const { return num_.involves(v) || den_.involves(v); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction invert() const;
  RationalFunction pow(int e) const;
  RationalFunction substitute(Var v, const RationalFunction& r) const;

  std::string to_string() const;

 private:
  void canonicalize();

  Polynomial num_;
  Polynomial den_;
};

enum class RfOp { add, mul, invert };

/// add, mul and invert on rational functions; `b` is ignored for invert.
RationalFunction rf_arith(RfOp op, const RationalFunction& a, const RationalFunction& b = {});

/// Exact value at a point; throws pole-at-point when the denominator vanishes.
Scalar evaluate_at(const RationalFunction& f, const Assignment& at);

enum class Region { at_infinity, at_zero };

/// Truncated expansion of a rational function in one variable. Exponents are
/// the actual powers of the variable: negative for at-infinity, non-negative
/// for at-zero. `order` bounds |exponent| (inclusive).
struct RegionSeries {
  Var var = Var::u;
  Region region = Region::at_infinity;
  int order = 0;
  std::map<int, RationalFunction> coefficients;

  RationalFunction coefficient(int exponent) const;
  /// Sum of the stored terms as a rational function.
  RationalFunction truncated_sum() const;
  std::string to_string() const;
};

RegionSeries series_expand(const RationalFunction& f, Var var, Region region, int order);

}  // namespace yangian
