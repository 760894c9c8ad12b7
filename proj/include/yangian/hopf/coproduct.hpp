#pragma once

#include <string>
#include <vector>

#include "yangian/hopf/tensor.hpp"
#include "yangian/report.hpp"

namespace yangian {

/// Shift s in the correction term -2 F(u+s)H(u) (x) H(u)E(u+s) of Delta(H).
enum class DeltaShift { minus, plus };

inline int shift_value(DeltaShift s) { return s == DeltaShift::minus ? -1 : 1; }
const char* to_string(DeltaShift s);
DeltaShift parse_delta_shift(const std::string& s);

/// Cartan current multiplying E and F in their coproducts:
/// Delta(E) = E (x) 1 + X (x) E and Delta(F) = 1 (x) F + F (x) X with X = K or H.
/// Only K is compatible with {e_m, f_n} = -k_{m+n}; H is kept for comparison.
enum class EfDressing { k, h };

const char* to_string(EfDressing d);
EfDressing parse_ef_dressing(const std::string& s);

struct DeltaConvention {
  DeltaShift shift = DeltaShift::minus;
  EfDressing dressing = EfDressing::k;
};

nlohmann::ordered_json to_json(const DeltaConvention& c);

/// Delta(g). Generators of mode >= 0 have finite coproducts and ignore `order`;
/// for negative modes the result is exact at total mode >= mode(g) - order.
TensorElement coproduct(const Generator& g, int order, DeltaConvention conv = {});

/// Delta(g) exact on the terms satisfying `floors`. Throws floor-too-shallow if
/// the coproduct is infinite and some leg is unbounded by `floors`.
TensorElement coproduct(const Generator& g, const std::vector<FloorConstraint>& floors,
                        DeltaConvention conv = {});

/// Delta of a combination of words, computed letter by letter.
TensorElement coproduct(const AlgebraElement& x, const std::vector<FloorConstraint>& floors,
                        DeltaConvention conv = {});

/// Applies Delta to leg `leg`, producing a tensor with one more leg.
/// `floors` refer to the legs of the result.
TensorElement apply_coproduct(const TensorElement& t, int leg,
                              const std::vector<FloorConstraint>& floors,
                              DeltaConvention conv = {});

/// (Delta (x) id) Delta(g) = (id (x) Delta) Delta(g) for all generators with |mode| <= max_mode.
Report verify_coassociativity(int max_mode, int order, DeltaConvention conv = {});

/// Delta(x)Delta(y) = Delta(xy) for generator pairs with |mode| <= max_mode.
Report verify_homomorphism(int max_mode, int order, DeltaConvention conv = {});

}  // namespace yangian
