#pragma once

#include <utility>
#include <vector>

#include "yangian/hopf/coproduct.hpp"

namespace yangian {

/// Pairing of single generators: a from the half of modes >= 0, b from the
/// half of modes < 0. Nonzero only for E x F, F x E, H x K and K x H.
struct PairingTable {
  static Scalar base(const Generator& a, const Generator& b);
  /// Counit: 1 on the unit, 0 on every generator.
  static Scalar counit(const Word& w) { return w.empty() ? Scalar(1) : Scalar(0); }
};

/// Weight of a word from the mode >= 0 half: sum of (mode + 1). A word of
/// the other half pairs to zero with it unless its mode sum is >= -weight.
int plus_weight(const Word& w);

/// <a, b> extended from the base table through
/// <a, c d> = <Delta(a), c (x) d> and <a b, c> = (-1)^{|a||b|} <b (x) a, Delta(c)>,
/// the flip of a (x) b carrying its Koszul sign.
/// Throws wrong-half when a has a negative mode or b a nonnegative one.
Scalar pairing(const AlgebraElement& a, const AlgebraElement& b,
               DeltaConvention conv = {});
Scalar pairing(const Word& a, const Word& b, DeltaConvention conv = {});

/// <a (x) b, c (x) d> = <a, c><b, d>. Odd-odd contributions need no extra
/// sign once the flip in the product rule carries one.
Scalar pairing(const TensorElement& a, const TensorElement& b,
               DeltaConvention conv = {});

struct PairingSample {
  Word a, b;  // mode >= 0 half
  Word c, d;  // mode < 0 half
};

/// Two-letter samples (a, b, c*, d*) over a small mode window, deterministic in `seed`.
std::vector<PairingSample> pairing_samples(int count, int max_mode, unsigned seed);

/// <ab, c*d*> computed directly, as <Delta(ab), c* (x) d*> and as
/// (-1)^{|a||b|} <b (x) a, Delta(c*d*)>; all three must agree.
Report verify_pairing_axiom(const std::vector<PairingSample>& samples, int order,
                            DeltaConvention conv = {});

/// Base table against the expansion of the generating-function pairings
/// at |u| > |v| for modes 0..max_index.
Report verify_pairing_table(int max_index);

}  // namespace yangian
