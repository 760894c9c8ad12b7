#pragma once

#include <climits>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "yangian/exactmath/scalar.hpp"

namespace yangian {

/// Generator classes listed in normal-form order.
enum class GenClass : unsigned char { F = 0, E = 1, H = 2, K = 3 };

char class_letter(GenClass c);

enum class Parity : unsigned char { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}
inline int sign_of(Parity a, Parity b) { return (a == Parity::odd && b == Parity::odd) ? -1 : 1; }

struct Generator {
  GenClass cls;
  int mode;

  Parity parity() const {
    return (cls == GenClass::E || cls == GenClass::F) ? Parity::odd : Parity::even;
  }
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline Generator e(int n) { return {GenClass::E, n}; }
inline Generator f(int n) { return {GenClass::F, n}; }
inline Generator h(int n) { return {GenClass::H, n}; }
inline Generator k(int n) { return {GenClass::K, n}; }

using Word = std::vector<Generator>;

Parity parity(const Word& w);
int mode_sum(const Word& w);
bool is_normal_form(const Word& w);
std::string to_string(const Generator& g);
std::string to_string(const Word& w);

/// Floor used for elements that were never truncated.
inline constexpr int kNoFloor = INT_MIN / 8;

/// Finite combination of words. Words are normal-ordered by every operation
/// of this module except `AlgebraElement::from_word`. When `truncated` is set,
/// terms of mode sum below `floor` were dropped and the element is exact only
/// at mode sums >= floor.
class AlgebraElement {
 public:
  using Terms = std::map<Word, Scalar>;

  AlgebraElement() = default;
  AlgebraElement(const Scalar& c);  // NOLINT(google-explicit-constructor)
  AlgebraElement(Generator g);      // NOLINT(google-explicit-constructor)
  /// Raw word, not normal-ordered.
  static AlgebraElement from_word(const Word& w, const Scalar& c = 1);

  const Terms& terms() const { return terms_; }
  int floor() const { return floor_; }
  bool truncated() const { return truncated_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Word& w) const;

  /// Adds c*w; the word must already satisfy the floor.
  void add_term(const Word& w, const Scalar& c);
  /// Raises the floor, dropping words below it.
  void truncate(int floor);
  /// Marks the element as exact only at mode sums >= floor.
  void set_floor(int floor, bool truncated);

  int max_mode() const;
  int min_mode() const;
  /// Definite parity; throws indefinite-parity for mixed elements.
  Parity parity() const;
  bool has_definite_parity() const;

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Scalar& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Scalar& c) { return a *= c; }
  friend AlgebraElement operator*(const Scalar& c, AlgebraElement a) { return a *= c; }

  /// Equality of normal forms at the coarser of the two floors.
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  /// Restriction to words of mode sum >= floor.
  AlgebraElement restricted(int floor) const;

  std::string to_string() const;

 private:
  Terms terms_;
  int floor_ = kNoFloor;
  bool truncated_ = false;
};

/// Normal-ordered expansion of [h_m, x_n] for x in {E, F}.
AlgebraElement h_current_bracket(GenClass target, int m, int n, int floor);

AlgebraElement normal_order(const AlgebraElement& x, int floor = kNoFloor);

/// Normal-ordered product. The result floor is the requested floor, raised to
/// whatever the truncation of the factors leaves exact.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b, int floor = kNoFloor);

/// ab - (-1)^{|a||b|} ba.
AlgebraElement super_bracket(const AlgebraElement& a, const AlgebraElement& b,
                             int floor = kNoFloor);

/// Deepest kappa recursion observed since the last reset (instrumentation).
int kappa_max_depth();
void kappa_reset_stats();

}  // namespace yangian
