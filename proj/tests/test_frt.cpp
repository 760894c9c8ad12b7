#include <catch2/catch_amalgamated.hpp>

#include "yangian/error.hpp"
#include "yangian/frt/frt.hpp"

using namespace yangian;

namespace {

RationalFunction var(Var v) { return RationalFunction::variable(v); }

Polynomial px() { return Polynomial::variable(Var::x); }

}  // namespace

TEST_CASE("scalar-free R matrix", "[frt]") {
  const RMatrix4 r = rbar_matrix();
  const RationalFunction z = var(Var::x) - var(Var::y);
  const RationalFunction one(1);
  CHECK(r.at(1, 2) == one / (z + one));
  CHECK(r.at(3, 3) == (z - one) / (z + one));
  CHECK(r.at(1, 1) == z / (z + one));
  CHECK(r.at(0, 0) == one);
  CHECK(r.at(0, 3).is_zero());
  CHECK(r.at(3, 0).is_zero());

  const RMatrix4 at1 = rbar_matrix(RationalFunction(1));
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) CHECK(at1.at(i, j) == RationalFunction(Scalar(1, 2)));
  CHECK(at1.at(3, 3).is_zero());

  int nonzero = 0;
  for (const auto& e : r.entries) nonzero += e.is_zero() ? 0 : 1;
  CHECK(nonzero == 6);
  CHECK(conserves_parity(r));
  RMatrix4 broken = r;
  broken.at(0, 1) = one;
  CHECK_FALSE(conserves_parity(broken));
}

TEST_CASE("unitarity", "[frt]") {
  const RationalFunction z = var(Var::x);
  const RMatrix4 p = rbar_matrix(z) * rbar_matrix(-z);
  CHECK(p.at(1, 1) == RationalFunction(1));
  CHECK(p.at(3, 3) == RationalFunction(1));
  CHECK(p.at(1, 2).is_zero());
  CHECK(unitarity_scalar(z) == RationalFunction(1));
  CHECK(unitarity_scalar(var(Var::x) - var(Var::y)) == RationalFunction(1));
}

TEST_CASE("scalar factors", "[frt]") {
  const Polynomial x = px();
  // rho^- at n = 0: x^2 (x+2)^2 / ((x-1)(x+1)^2(x+3)).
  const ScalarFactor m0 = rho_factor(LSign::minus, 0);
  CHECK(m0.value() == RationalFunction(x.pow(2) * (x + Polynomial(2)).pow(2),
                                       (x - Polynomial(1)) * (x + Polynomial(1)).pow(2) * (x + Polynomial(3))));
  // rho^+ at n = 0, expanded by hand.
  const ScalarFactor p0 = rho_factor(LSign::plus, 0);
  const Polynomial num = x.pow(4) - Polynomial(4) * x.pow(3) + Polynomial(2) * x.pow(2) + Polynomial(4) * x - Polynomial(3);
  const Polynomial den = x.pow(4) - Polynomial(4) * x.pow(3) + Polynomial(4) * x.pow(2);
  CHECK(p0.value() == RationalFunction(num, den));

  CHECK(rho_scalar(LSign::plus, 3).value() ==
        p0.value() * rho_scalar(LSign::plus, 2).value().substitute(Var::x, RationalFunction(x - Polynomial(2))));

  CHECK(rho_scalar_at(LSign::plus, Scalar(21, 2), 0) == evaluate_at(p0.value(), {{Var::x, Scalar(21, 2)}}));
  CHECK_THROWS_AS(rho_scalar_at(LSign::plus, Scalar(10), 4), Error);
  CHECK_NOTHROW(rho_scalar_at(LSign::plus, Scalar(10), 3));

  const Report rec = verify_scalar_recursion(12);
  CHECK(rec.passed());
  CHECK(rec.checks.size() == 24);
}

TEST_CASE("scalar factor convergence is slow", "[frt]") {
  // The factors behave like 1 - 2/(x-2n)^2, so the tail after N is of order 1/N.
  const Report r = verify_scalar_convergence({Scalar(21, 2)}, 200, 400, 1e-2);
  CHECK(r.passed());
  const double diff = r.checks[0].params["difference"].get<double>();
  CHECK(diff > 1e-4);
  CHECK(diff < 3e-3);
  const Report pole = verify_scalar_convergence({Scalar(10)}, 200, 400, 1e-6);
  CHECK_FALSE(pole.passed());
  CHECK(pole.checks[0].witness.find("pole") != std::string::npos);
}

TEST_CASE("graded Yang-Baxter equation", "[frt]") {
  CHECK(ybe_residuals_at(Scalar(3, 7), Scalar(-5, 11), Scalar(13, 5)) == 0);
  CHECK(ybe_residuals_at(Scalar(3, 7), Scalar(-5, 11), Scalar(13, 5), false) > 0);
  CHECK_THROWS_AS(ybe_residuals_at(Scalar(0), Scalar(1), Scalar(5)), Error);

  const Report r = verify_graded_ybe(25, 7);
  CHECK(r.passed());
  CHECK(r.checks.size() == 27);
  const Report again = verify_graded_ybe(25, 7);
  for (std::size_t i = 0; i < r.checks.size(); ++i) CHECK(r.checks[i].params == again.checks[i].params);
}

TEST_CASE("RLL relations", "[frt]") {
  for (auto pair : {RllPair::minus_minus, RllPair::plus_plus, RllPair::minus_plus}) {
    INFO(to_string(pair));
    const Report r = verify_rll(pair, 1);
    for (const auto& c : r.checks) {
      INFO(c.name << " " << c.witness);
      CHECK(c.status == Status::pass);
    }
    CHECK(r.checks.size() == 18);
    RllOptions scaled;
    scaled.scalar_shift = 5;
    CHECK(verify_rll(pair, 1, scaled).passed());
  }
  CHECK(parse_rll_pair("-+") == RllPair::minus_plus);
  CHECK_THROWS_AS(parse_rll_pair("+-"), Error);
  CHECK_THROWS_AS(verify_rll(RllPair::minus_minus, 3), Error);
}

TEST_CASE("RLL fails with the printed minus-factor sign", "[frt]") {
  RllOptions printed;
  printed.conv.minus_sign = -1;
  CHECK_FALSE(verify_rll(RllPair::minus_minus, 1, printed).passed());
}

TEST_CASE("coproduct of L", "[frt]") {
  const Report r = verify_L_coproduct(2);
  CHECK(r.passed());
  CHECK(r.checks.size() == 8);
  for (const auto& c : r.checks) CHECK(c.params["compared_terms"].get<int>() > 0);
}
