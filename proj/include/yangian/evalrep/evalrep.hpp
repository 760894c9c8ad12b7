#pragma once

#include <array>
#include <map>
#include <string>

#include "yangian/currents/currents.hpp"
#include "yangian/exactmath/rational_function.hpp"
#include "yangian/report.hpp"
#include "yangian/urmat/rmatrix.hpp"

namespace yangian {

/// Parity of the basis vector with 0-based index i: P(1) = even, P(2) = odd.
inline Parity index_parity(int i) { return i == 0 ? Parity::even : Parity::odd; }

/// 2x2 matrix over Q(x), row-major.
struct RepMatrix {
  std::array<RationalFunction, 4> entries{};

  static RepMatrix identity();
  RationalFunction& at(int i, int j) { return entries[2 * i + j]; }
  const RationalFunction& at(int i, int j) const { return entries[2 * i + j]; }
  bool is_zero() const;

  RepMatrix& operator+=(const RepMatrix& o);
  RepMatrix& operator*=(const RationalFunction& c);
  friend RepMatrix operator+(RepMatrix a, const RepMatrix& b) { return a += b; }
  friend RepMatrix operator*(const RepMatrix& a, const RepMatrix& b);
  friend bool operator==(const RepMatrix& a, const RepMatrix& b) { return a.entries == b.entries; }

  std::string to_string() const;
};

/// rho_x(e_n) = x^n E21, rho_x(f_n) = x^n E12, rho_x(h_n) = x^n diag(1, -1), rho_x(k_n) = -x^n.
RepMatrix rho_matrix(const Generator& g);
/// Image of a combination of (not necessarily ordered) words.
RepMatrix rho_matrix(const AlgebraElement& a);

/// Every defining relation with m, n in [lo, hi] maps to the zero matrix.
Report verify_rep_relations(int lo, int hi);

/// Series in one spectral variable with algebra coefficients: sum_p x^p c_p.
/// Exponents below `min_exponent` were not computed; every coefficient is exact
/// only at mode sums >= `floor`. Plus-type series run downwards in x and
/// carry plus-half coefficients; minus-type series run upwards and carry
/// minus-half coefficients.
struct SpectralSeries {
  std::map<int, AlgebraElement> terms;
  int min_exponent = kNoFloor;
  int floor = kNoFloor;

  static SpectralSeries constant(const AlgebraElement& c, int min_exponent, int floor);
  AlgebraElement coefficient(int p) const;
  void add(int p, const AlgebraElement& c);

  SpectralSeries operator-() const;
  SpectralSeries& operator+=(const SpectralSeries& o);
  SpectralSeries& operator-=(const SpectralSeries& o);
  friend SpectralSeries operator+(SpectralSeries a, const SpectralSeries& b) { return a += b; }
  friend SpectralSeries operator-(SpectralSeries a, const SpectralSeries& b) { return a -= b; }
  friend SpectralSeries operator*(const SpectralSeries& a, const SpectralSeries& b);
  /// Equality on the exponents and modes that both operands determine.
  friend bool operator==(const SpectralSeries& a, const SpectralSeries& b);

  std::string to_string(char var = 'x') const;
};

/// a^{-1} for a series whose leading term is the unit.
SpectralSeries series_inverse(const SpectralSeries& a);
/// a(x + s), re-expanded in the series' own region.
SpectralSeries series_shift(const SpectralSeries& a, int s);
/// Coefficients as a current: x^p becomes index -p-1.
CurrentSeries to_current(const SpectralSeries& a, GenClass cls, CurrentSign sign);

enum class LSign { plus, minus };

const char* to_string(LSign s);

/// Entries in operator form: the matrix product of two LMatrix values is the
/// product in End(V) (x) A. The coefficient form of (rho (x) id) differs by the
/// sign -1 on the (1,2) entry.
struct LMatrix {
  LSign sign = LSign::minus;
  int floor = kNoFloor;
  std::array<SpectralSeries, 4> entries{};

  SpectralSeries& at(int i, int j) { return entries[2 * i + j]; }
  const SpectralSeries& at(int i, int j) const { return entries[2 * i + j]; }
};

/// L^-(x) = (rho_x (x) id) R and L^+(x) = (rho_x (x) id)(R^{21})^{-1}. L^- is exact at
/// algebra modes >= d, L^+ at exponents x^p with p >= d, where d is the floor of R.
LMatrix build_L(LSign sign, int cutoff, int order_m, int floor, const RConvention& conv = {});

/// L = [[1,0],[F,1]] diag(k1, k2) [[1,E],[0,1]].
struct GaussFactors {
  SpectralSeries f_part, k1, k2, e_part;
};

GaussFactors gauss_decompose(const LMatrix& l);
LMatrix gauss_reassemble(const GaussFactors& g, LSign sign, int floor);

/// Which currents enter k1^-, k2^-: the printed K^+, H^+, or K^-, H^- matching k1^+, k2^+.
enum class KMinusReading { minus, printed };

const char* to_string(KMinusReading r);
KMinusReading parse_kminus_reading(const std::string& s);

enum class KFactor { k1, k2 };

/// X^{sign}(x + s) for X = H or K. Plus series keep x^{-p} for p <= order; minus
/// series are exact at modes >= -order-1.
SpectralSeries cartan_current(GenClass cls, LSign sign, int s, int order);

/// Partial product over n = 0..N of the k-factor ratios, evaluated at x + s.
SpectralSeries k_factor_products(LSign sign, KFactor which, int cutoff, int order, int s = 0,
                                 KMinusReading reading = KMinusReading::minus);

/// k2 k1^{-1} = K(x) K(x -+ (2N+2))^{-1} and k1(x) k2(x-1) = H(x) H(x -+ (2N+2))^{-1}.
Report verify_telescoping(int cutoff, int order);

/// Diagonal Gauss factors of L built with the literal partial Cartan product
/// against k_factor_products, for both readings of the minus factors. The
/// reading that matches is recorded in the report config.
Report verify_gauss_consistency(int cutoff, int order);

/// Currents extracted from L^+- (E, F from the Gauss factors, K = k1^{-1}k2,
/// H = k1(x)k2(x-1)) compared with the Drinfeld currents and run through the
/// current relations on the window [-order, order - 1].
Report ding_frenkel_check(int cutoff, int order_m, int order, int floor);

}  // namespace yangian
