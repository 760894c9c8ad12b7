#pragma once

#include <map>
#include <string>
#include <vector>

#include "yangian/superalg/algebra.hpp"

namespace yangian {

/// Truncation record: terms that were never materialized have a mode sum
/// below `floor` over the legs selected by the bit mask `legs`.
struct FloorConstraint {
  unsigned legs = 0;
  int floor = kNoFloor;
  friend bool operator==(const FloorConstraint&, const FloorConstraint&) = default;
};

inline unsigned leg_bit(int leg) { return 1u << leg; }

/// Graded tensor of two or three legs with Koszul-signed multiplication.
class TensorElement {
 public:
  using Key = std::vector<Word>;
  using Terms = std::map<Key, Scalar>;

  explicit TensorElement(int legs = 2) : legs_(legs) {}
  static TensorElement unit(int legs);
  /// a_1 (x) a_2 (x) ...; truncated factors contribute per-leg constraints.
  static TensorElement pure(const std::vector<AlgebraElement>& factors);
  static TensorElement from_key(const Key& k, const Scalar& c = 1);

  int legs() const { return legs_; }
  const Terms& terms() const { return terms_; }
  const std::vector<FloorConstraint>& constraints() const { return constraints_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_exact() const { return constraints_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Key& k) const;

  /// Floor of the single-leg constraint on `leg`, or kNoFloor.
  int leg_floor(int leg) const;
  /// Adds a constraint and drops the terms it makes unreliable.
  void impose(FloorConstraint c);
  void impose_leg_floor(int leg, int floor) { impose({leg_bit(leg), floor}); }
  bool reliable(const Key& k) const;
  int max_mode(unsigned legs) const;

  void add_term(const Key& k, const Scalar& c);
  /// Adds c * (a_1 (x) ... ) with a_i given per leg.
  void add_product(const std::vector<const AlgebraElement*>& factors, const Scalar& c);

  TensorElement operator-() const;
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Scalar& c);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(TensorElement a, const Scalar& c) { return a *= c; }

  /// Equality of the terms that both operands determine.
  friend bool operator==(const TensorElement& a, const TensorElement& b);

  /// Terms reliable under the union of both constraint sets.
  Terms reliable_terms(const std::vector<FloorConstraint>& extra = {}) const;

  std::string to_string(std::size_t max_terms = 0) const;

 private:
  int legs_;
  Terms terms_;
  std::vector<FloorConstraint> constraints_;
};

Parity parity(const TensorElement::Key& k);
int mode_sum(const TensorElement::Key& k, unsigned legs);
bool satisfies(const TensorElement::Key& k, const std::vector<FloorConstraint>& cs);

/// (A (x) B)(C (x) D) = (-1)^{|B||C|} AC (x) BD, generalized to three legs.
/// `floors` are additional requested truncations.
TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b,
                              const std::vector<FloorConstraint>& floors = {});
/// Same, with one single-leg floor applied to every leg.
TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b, int leg_floor);

/// Per-leg floors for every leg.
std::vector<FloorConstraint> leg_floors(int legs, int floor);

}  // namespace yangian
