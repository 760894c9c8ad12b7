#pragma once

#include <string>
#include <vector>

#include "yangian/currents/currents.hpp"
#include "yangian/hopf/coproduct.hpp"

namespace yangian {

enum class RFactorKind { plus, minus, cartan1, cartan2 };

const char* to_string(RFactorKind k);

/// How the infinite product over n in the Cartan factors is taken.
///  partial:   the printed product over n = 0..N, term by term.
///  resummed:  all n at once, sum_n f(v+2n+1) = -(1/(2 sinh d/dv)) f(v), which turns
///             the exponent into sum_k phi_k (x) G_k (see cartan_resummation_coefficients).
enum class CartanMode { partial, resummed };

const char* to_string(CartanMode m);
CartanMode parse_cartan_mode(const std::string& s);

struct RFactorSpec {
  RFactorKind kind = RFactorKind::plus;
  int cutoff = 3;  // N: product index n = 0..N
  int order = 4;   // M: highest log coefficient kept in the Cartan factors
  CartanMode cartan = CartanMode::resummed;
};

/// Overall sign s in R_- = prod exp(s f_n (x) e_{-n-1}). The printed value is -1;
/// +1 is the one for which (rho (x) rho) R is proportional to the rational R-matrix.
struct RConvention {
  CartanMode cartan = CartanMode::resummed;
  int minus_sign = 1;
  /// Last n of the partial Cartan product; negative means the E/F cutoff N.
  int partial_cutoff = -1;
};

/// Leg-2 mode below which a factor with these cutoffs is no longer exact.
int factor_exact_floor(const RFactorSpec& spec);

/// One factor of R, exact at leg-2 mode >= max(floor, factor_exact_floor(spec)).
/// `minus_sign` is the sign in the exponent of the minus factor.
TensorElement build_R_factor(const RFactorSpec& spec, int floor, int minus_sign = -1);

/// Res_{u=v} A(u) (x) B(v) = sum_k a_k (x) b_{-k-1}, with a_k the coefficient of
/// u^{-k-1} and b_{-k-1} that of v^k.
TensorElement residue_tensor(const CurrentSeries& a, const CurrentSeries& b);

/// c_p with -t / (2 sinh t) = sum_p c_p t^{2p}.
std::vector<Scalar> cartan_resummation_coefficients(int count);

/// R = R_+ R_1 R_2 R_-, exact at leg-2 mode >= max(floor, -N-1, -M-1).
TensorElement assemble_R(int cutoff, int order, int floor, const RConvention& conv = {});

/// exp(t) for a tensor whose terms all have leg-2 mode <= -1, truncated at leg-2 floor.
TensorElement tensor_exp(const TensorElement& t, int leg2_floor);

/// Graded flip a (x) b -> (-1)^{|a||b|} b (x) a.
TensorElement graded_flip(const TensorElement& t);

/// x^{-1} = sum_j (1 - x)^j for x = 1 (x) 1 + T, where every term of T lowers the
/// mode of leg `leg`; the series is cut at that leg's floor.
TensorElement tensor_inverse(const TensorElement& t, int leg, int floor);

enum class QuasiTriangularCheck { ybe, coproduct_left, coproduct_right };

const char* to_string(QuasiTriangularCheck c);

/// (Delta (x) id) R = R13 R23, (id (x) Delta) R = R13 R12, and R12 R13 R23 = R23 R13 R12,
/// each compared on the terms that both sides determine at minus-leg floor -order.
Report verify_quasi_triangular(QuasiTriangularCheck which, int cutoff, int order_m, int order,
                               const RConvention& conv = {}, const DeltaConvention& delta = {});

}  // namespace yangian
