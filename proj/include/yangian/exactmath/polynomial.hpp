#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <vector>

#include "yangian/exactmath/scalar.hpp"

namespace yangian {

/// The closed set of indeterminates. `w` is kept free for shifted re-expansions.
enum class Var : int { u = 0, v = 1, x = 2, y = 3, w = 4 };

inline constexpr int kNumVars = 5;

const char* var_name(Var v);
Var parse_var(const std::string& name);

using Monomial = std::array<int, kNumVars>;

/// Graded lexicographic order with u < v < x < y < w.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using Assignment = std::map<Var, Scalar>;

/// Sparse multivariate polynomial with integer coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, mpz_class, GrlexLess>;

  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const mpz_class& c);

  static Polynomial variable(Var v);
  static Polynomial monomial(const mpz_class& c, const Monomial& m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  mpz_class constant_term() const;

  int degree(Var v) const;
  int total_degree() const;
  bool involves(Var v) const { return degree(v) > 0; }
  /// Highest-indexed variable that occurs, or -1 for constants.
  int main_var() const;

  const Monomial& leading_monomial() const;
  const mpz_class& leading_coefficient() const;
  /// Coefficient of v^d as a polynomial in the other variables.
  Polynomial coefficient(Var v, int d) const;
  Polynomial leading_coefficient_in(Var v) const { return coefficient(v, degree(v)); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const mpz_class& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(int e) const;
  Polynomial times_var_power(Var v, int e) const;
  /// Replaces v by the polynomial p.
  Polynomial substitute(Var v, const Polynomial& p) const;
  /// Exact value; all occurring variables must be assigned.
  Scalar evaluate(const Assignment& at) const;

  mpz_class integer_content() const;
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Greatest common divisor with positive leading coefficient (gcd(0,0) = 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Quotient a/b; throws when b does not divide a exactly.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

}  // namespace yangian
