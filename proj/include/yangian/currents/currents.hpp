#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "yangian/report.hpp"
#include "yangian/superalg/algebra.hpp"

namespace yangian {

enum class CurrentSign { plus, minus, full };

const char* to_string(CurrentSign s);

/// Closed integer interval of modes.
struct ModeWindow {
  int lo = 0;
  int hi = 0;
  bool contains(int n) const { return lo <= n && n <= hi; }
  int size() const { return hi - lo + 1; }
};

/// Generating function in one spectral variable. Index a holds the
/// coefficient of u^{-a-1}; the unit of H and K sits at a = -1.
struct CurrentSeries {
  GenClass cls = GenClass::E;
  CurrentSign sign = CurrentSign::plus;
  ModeWindow window;
  std::map<int, AlgebraElement> coefficients;

  AlgebraElement coefficient(int a) const;
  std::string to_string(char var = 'u') const;
};

CurrentSeries build_current(GenClass cls, CurrentSign sign, ModeWindow window);

/// Coefficients D(a, b) of u^{-a-1} v^{-b-1} over a rectangular window.
class FormalDistribution2 {
 public:
  FormalDistribution2() = default;
  FormalDistribution2(ModeWindow a, ModeWindow b) : a_(a), b_(b) {}

  /// A(u) B(v) when a_first, otherwise B(v) A(u).
  static FormalDistribution2 product(const CurrentSeries& a_u, const CurrentSeries& b_v,
                                     bool a_first, ModeWindow a, ModeWindow b, int floor);
  /// delta(u - v) G(w) with w = u or v; D(a, b) = G_{a+b} either way.
  static FormalDistribution2 delta_times(const CurrentSeries& g, ModeWindow a, ModeWindow b);

  ModeWindow a_window() const { return a_; }
  ModeWindow b_window() const { return b_; }
  AlgebraElement coefficient(int a, int b) const;
  void set(int a, int b, AlgebraElement c);

  FormalDistribution2 times_u() const;
  FormalDistribution2 times_v() const;
  FormalDistribution2& operator+=(const FormalDistribution2& o);
  FormalDistribution2& operator-=(const FormalDistribution2& o);
  FormalDistribution2 operator*(const Scalar& c) const;
  friend FormalDistribution2 operator+(FormalDistribution2 x, const FormalDistribution2& y) { return x += y; }
  friend FormalDistribution2 operator-(FormalDistribution2 x, const FormalDistribution2& y) { return x -= y; }

 private:
  ModeWindow a_, b_;
  std::map<std::pair<int, int>, AlgebraElement> coeffs_;
};

enum class RelationId { HH, HK, KK, KE, KF, EE, FF, HE, HF };

const char* to_string(RelationId id);
RelationId parse_relation_id(const std::string& s);

/// Source of the currents a relation check is run on; build_current by default.
using CurrentProvider = std::function<CurrentSeries(GenClass, CurrentSign, ModeWindow)>;

/// Checks one family of current relations coefficient-wise on window x window.
Report verify_current_relation(RelationId id, ModeWindow window, int floor,
                               const CurrentProvider& currents = build_current);

/// {E(u), F(v)} = delta(u - v) [K^-(v) - K^+(u)] coefficient-wise.
Report verify_ef_delta(ModeWindow window, int floor, const CurrentProvider& currents = build_current);

}  // namespace yangian
