#include <catch2/catch_amalgamated.hpp>

#include "yangian/error.hpp"
#include "yangian/evalrep/evalrep.hpp"
#include "yangian/superalg/relations.hpp"

using namespace yangian;

namespace {

RationalFunction xp(int n) { return RationalFunction::variable(Var::x).pow(n); }

RepMatrix mat(RationalFunction a, RationalFunction b, RationalFunction c, RationalFunction d) {
  RepMatrix m;
  m.entries = {std::move(a), std::move(b), std::move(c), std::move(d)};
  return m;
}

// E^-(x) = -sum_{j>=0} e_{-j-1} x^j, exact at modes >= floor.
SpectralSeries minus_current(GenClass c, int floor) {
  SpectralSeries s;
  s.floor = floor;
  for (int j = 0; -j - 1 >= floor; ++j) s.add(j, -AlgebraElement(Generator{c, -j - 1}));
  return s;
}

// E^+(x) = sum_{n>=0} e_n x^{-n-1}, kept down to x^{-order}.
SpectralSeries plus_current(GenClass c, int order) {
  SpectralSeries s;
  s.min_exponent = -order;
  for (int n = 0; n < order; ++n) s.add(-n - 1, AlgebraElement(Generator{c, n}));
  return s;
}

SpectralSeries unit_series(int min_exponent, int floor) {
  return SpectralSeries::constant(AlgebraElement(Scalar(1)), min_exponent, floor);
}

const DefiningRelation& find_relation(const std::vector<DefiningRelation>& rels, const std::string& name) {
  for (const auto& r : rels)
    if (r.name() == name) return r;
  throw std::runtime_error("no relation " + name);
}

}  // namespace

TEST_CASE("evaluation matrices", "[evalrep]") {
  CHECK(rho_matrix(e(2)) == mat(0, 0, xp(2), 0));
  CHECK(rho_matrix(k(-1)) == mat(-xp(-1), 0, 0, -xp(-1)));
  CHECK(rho_matrix(h(0)) == mat(1, 0, 0, -1));
  CHECK(rho_matrix(f(-3)) == mat(0, xp(-3), 0, 0));
  CHECK(rho_matrix(AlgebraElement(Scalar(3))) == mat(3, 0, 0, 3));
  CHECK(index_parity(0) == Parity::even);
  CHECK(index_parity(1) == Parity::odd);
}

TEST_CASE("evaluation representation is a homomorphism", "[evalrep]") {
  const auto rels = defining_relations(-2, 2);
  CHECK(rho_matrix(find_relation(rels, "he(1,-2)").raw).is_zero());
  CHECK(rho_matrix(find_relation(rels, "ef(0,0)").raw).is_zero());
  CHECK(rho_matrix(find_relation(rels, "ke(2,-1)").raw).is_zero());
  CHECK(rho_matrix(find_relation(rels, "hf(-1,2)").raw).is_zero());

  // Each bracket of the he line is -2 x^{m+n+1} E21 on its own.
  const RepMatrix anti = rho_matrix(AlgebraElement::from_word({h(1), e(-2)}, Scalar(1))) +
                         rho_matrix(AlgebraElement::from_word({e(-2), h(1)}, Scalar(1)));
  CHECK(anti.is_zero());

  const Report rep = verify_rep_relations(-5, 5);
  CHECK(rep.passed());
  CHECK(rep.checks.size() == 10 * 11 * 11 + 2 * 11);
}

TEST_CASE("spectral series arithmetic", "[evalrep]") {
  SpectralSeries k_plus = unit_series(-4, kNoFloor) + plus_current(GenClass::K, 4);
  const SpectralSeries inv = series_inverse(k_plus);
  CHECK(inv * k_plus == unit_series(-4, kNoFloor));
  CHECK(k_plus * inv == unit_series(-4, kNoFloor));
  CHECK(series_shift(series_shift(k_plus, 3), -5) == series_shift(k_plus, -2));
  CHECK(series_shift(k_plus, 0) == k_plus);

  SpectralSeries k_minus = unit_series(kNoFloor, -4) + minus_current(GenClass::K, -4);
  CHECK(series_inverse(k_minus) * k_minus == unit_series(kNoFloor, -4));
  CHECK(series_shift(series_shift(k_minus, 2), -2) == k_minus);

  CHECK_THROWS_AS(series_inverse(plus_current(GenClass::K, 3)), Error);

  const CurrentSeries c = to_current(plus_current(GenClass::E, 3), GenClass::E, CurrentSign::plus);
  CHECK(c.coefficients.at(0) == AlgebraElement(e(0)));
  CHECK(c.coefficients.at(2) == AlgebraElement(e(2)));
}

TEST_CASE("L operators from the truncated R", "[evalrep]") {
  for (auto sign : {LSign::minus, LSign::plus}) {
    INFO(to_string(sign));
    const LMatrix l = build_L(sign, 2, 2, -3);
    // Unit slice.
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        for (const auto& [p, c] : l.at(i, j).terms) {
          const Scalar unit = c.coefficient({});
          CHECK(unit == Scalar(i == j && p == 0 ? 1 : 0));
        }
        for (const auto& [p, c] : l.at(i, j).terms)
          for (const auto& [w, s] : c.terms())
            CHECK(parity(w) == (index_parity(i) + index_parity(j)));
      }
  }

  // The upper-right entry of L^- comes from R_- alone: E^-(x).
  const LMatrix lm = build_L(LSign::minus, 1, 1, -2);
  CHECK(gauss_decompose(lm).e_part == minus_current(GenClass::E, -2));

  // L^+ (2,1): f letters with non-negative modes, leading f_0 x^{-1}.
  const LMatrix lp = build_L(LSign::plus, 2, 2, -3);
  CHECK(lp.at(1, 0).coefficient(-1) == AlgebraElement(f(0)));
  for (const auto& [p, c] : lp.at(1, 0).terms)
    for (const auto& [w, s] : c.terms())
      for (const auto& g : w)
        if (g.cls == GenClass::F) CHECK(g.mode >= 0);
  CHECK(gauss_decompose(lp).f_part == plus_current(GenClass::F, 3));
}

TEST_CASE("printed minus-factor sign flips the E-part", "[evalrep]") {
  RConvention printed;
  printed.minus_sign = -1;
  const LMatrix lm = build_L(LSign::minus, 1, 1, -2, printed);
  CHECK(gauss_decompose(lm).e_part == -minus_current(GenClass::E, -2));
}

TEST_CASE("Gauss decomposition", "[evalrep]") {
  LMatrix id;
  id.sign = LSign::plus;
  for (int i = 0; i < 2; ++i) id.at(i, i) = unit_series(-3, kNoFloor);
  const GaussFactors g0 = gauss_decompose(id);
  CHECK(g0.e_part.terms.empty());
  CHECK(g0.f_part.terms.empty());
  CHECK(g0.k1 == unit_series(-3, kNoFloor));
  CHECK(g0.k2 == unit_series(-3, kNoFloor));

  // A symbolic Gauss form returns its own factors.
  GaussFactors g;
  g.k1 = unit_series(-3, kNoFloor) + plus_current(GenClass::K, 3);
  g.k2 = unit_series(-3, kNoFloor) + plus_current(GenClass::H, 3);
  g.e_part = plus_current(GenClass::E, 3);
  g.f_part = plus_current(GenClass::F, 3);
  const GaussFactors back = gauss_decompose(gauss_reassemble(g, LSign::plus, kNoFloor));
  CHECK(back.k1 == g.k1);
  CHECK(back.k2 == g.k2);
  CHECK(back.e_part == g.e_part);
  CHECK(back.f_part == g.f_part);

  for (auto sign : {LSign::minus, LSign::plus}) {
    const LMatrix l = build_L(sign, 2, 2, -3);
    const LMatrix r = gauss_reassemble(gauss_decompose(l), sign, l.floor);
    for (int i = 0; i < 4; ++i) CHECK(r.entries[i] == l.entries[i]);
  }
}

TEST_CASE("k-factor products", "[evalrep]") {
  for (auto sign : {LSign::plus, LSign::minus})
    for (auto which : {KFactor::k1, KFactor::k2}) {
      const SpectralSeries s = k_factor_products(sign, which, 2, 3);
      CHECK(s.coefficient(0).coefficient({}) == Scalar(1));
    }
  for (int n = 1; n <= 3; ++n) {
    const Report t = verify_telescoping(n, 4);
    INFO(n);
    CHECK(t.passed());
  }
}

TEST_CASE("Gauss factors agree with the k-factor products", "[evalrep]") {
  const Report r = verify_gauss_consistency(1, 3);
  CHECK(r.passed());
  CHECK(r.config["kminus_reading"] == "minus");
  CHECK(parse_kminus_reading("printed") == KMinusReading::printed);
  CHECK_THROWS_AS(parse_kminus_reading("other"), Error);
}

TEST_CASE("Ding-Frenkel extraction", "[evalrep]") {
  const Report r = ding_frenkel_check(2, 2, 1, -3);
  CHECK(r.passed());
  CHECK(r.checks.size() > 50);
  CHECK_THROWS_AS(ding_frenkel_check(2, 2, 2, -3), Error);
}
