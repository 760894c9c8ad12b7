#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "yangian/evalrep/evalrep.hpp"
#include "yangian/exactmath/rational_function.hpp"
#include "yangian/hopf/coproduct.hpp"
#include "yangian/report.hpp"

namespace yangian {

/// Index of the basis vector v_i (x) v_j of V (x) V, 0-based, leg 1 slowest: (11, 12, 21, 22).
inline int pair_index(int i, int j) { return 2 * i + j; }

/// 4x4 matrix on V (x) V. Entry (ij, kl) maps v_k (x) v_l to v_i (x) v_j, graded sign
/// conventions included (operator form).
struct RMatrix4 {
  std::array<RationalFunction, 16> entries{};

  RationalFunction& at(int row, int col) { return entries[4 * row + col]; }
  const RationalFunction& at(int row, int col) const { return entries[4 * row + col]; }
  const RationalFunction& at(int i, int j, int k, int l) const { return at(pair_index(i, j), pair_index(k, l)); }

  friend RMatrix4 operator*(const RMatrix4& a, const RMatrix4& b);
  friend bool operator==(const RMatrix4& a, const RMatrix4& b) { return a.entries == b.entries; }
  std::string to_string() const;
};

/// The scalar-free matrix: 1 on 11, b = z/(z+1), c = 1/(z+1) on the 12/21 block, d = (z-1)/(z+1) on 22.
RMatrix4 rbar_matrix(const RationalFunction& z);
/// rbar_matrix(x - y).
RMatrix4 rbar_matrix();

/// Entry (ij, kl) vanishes unless P(i)+P(j) = P(k)+P(l).
bool conserves_parity(const RMatrix4& r);

/// c(z) with Rbar(z) Rbar(-z) = c(z) * 1. Throws not-scalar otherwise.
RationalFunction unitarity_scalar(const RationalFunction& z);

/// Partial product n = 0..N of the scalar-factor ratios, kept as unreduced
/// numerator and denominator polynomials in x.
struct ScalarFactor {
  LSign sign = LSign::plus;
  int cutoff = 0;
  Polynomial numerator{1};
  Polynomial denominator{1};

  RationalFunction value() const { return RationalFunction(numerator, denominator); }
};

/// Factor n of rho^+ or rho^- as a function of x.
ScalarFactor rho_factor(LSign sign, int n);
ScalarFactor rho_scalar(LSign sign, int cutoff);
/// Exact value of the partial product at a rational point. Throws pole-at-point
/// when a denominator factor vanishes.
Scalar rho_scalar_at(LSign sign, const Scalar& x, int cutoff);

/// rho^+_N(x) = g(x) rho^+_{N-1}(x-2), rho^-_N(x) = g(x) rho^-_{N-1}(x+2), g the n=0
/// factor, for N = 1..max_cutoff; n = 0 factors against their closed forms.
Report verify_scalar_recursion(int max_cutoff);

/// |rho^+_{n1}(x) - rho^+_{n2}(x)| < tol at each point; a pole is a failure with the
/// offending factor as witness.
Report verify_scalar_convergence(const std::vector<Scalar>& points, int n1, int n2, double tol);

/// Number of the 64 component equations of the graded YBE that fail at (x, y, w).
/// `graded = false` forces every parity even. Throws pole-at-point.
int ybe_residuals_at(const Scalar& x, const Scalar& y, const Scalar& w, bool graded = true);

/// Graded YBE at `points` seeded random rational points, once symbolically, and
/// the ungraded negative control.
Report verify_graded_ybe(int points, std::uint64_t seed);

enum class RllPair { plus_plus, minus_minus, minus_plus };

const char* to_string(RllPair p);
RllPair parse_rll_pair(const std::string& s);

struct RllOptions {
  int cutoff = 2;
  int order_m = 2;
  int floor = -3;
  /// Extra scalar (u - v + scalar_shift) multiplying R on both sides; 0 disables it.
  int scalar_shift = 0;
  RConvention conv{};
};

/// R(u-v) L_1(u) L_2(v) = L_2(v) L_1(u) R(u-v) in End(V) (x) End(V) (x) A for all 16
/// index tuples, with R^- L^-_1 L^+_2 = L^+_2 L^-_1 R^- for the mixed pair. Also
/// reports the component form with the printed sign factors.
Report verify_rll(RllPair pair, int order, const RllOptions& opt = {});

/// Delta(L_ij(u)) = sum_k (-1)^{(P(i)+P(k))(P(k)+P(j))} L_kj(u) (x) L_ik(u) coefficient-wise
/// for both signs, at series order `order`.
Report verify_L_coproduct(int order, DeltaConvention conv = {});

}  // namespace yangian
