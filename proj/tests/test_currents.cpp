#include <catch2/catch_amalgamated.hpp>

#include "yangian/currents/currents.hpp"
#include "yangian/error.hpp"

using namespace yangian;

TEST_CASE("build_current reference values", "[currents]") {
  auto ep = build_current(GenClass::E, CurrentSign::plus, {0, 2});
  CHECK(ep.coefficients.size() == 3);
  CHECK(ep.coefficient(0) == AlgebraElement(e(0)));
  CHECK(ep.coefficient(2) == AlgebraElement(e(2)));

  auto km = build_current(GenClass::K, CurrentSign::minus, {-2, -1});
  CHECK(km.coefficient(-1) == AlgebraElement(Scalar(1)) - AlgebraElement(k(-1)));
  CHECK(km.coefficient(-2) == -AlgebraElement(k(-2)));
  CHECK(km.coefficients.size() == 2);

  auto ff = build_current(GenClass::F, CurrentSign::full, {-1, 0});
  CHECK(ff.coefficient(-1) == AlgebraElement(f(-1)));  // u^0 term
  CHECK(ff.coefficient(0) == AlgebraElement(f(0)));

  CHECK_THROWS_AS(build_current(GenClass::H, CurrentSign::full, {0, 1}), Error);
}

TEST_CASE("full currents are plus minus minus", "[currents]") {
  const ModeWindow w{-5, 5};
  for (GenClass c : {GenClass::E, GenClass::F}) {
    auto full = build_current(c, CurrentSign::full, w);
    auto plus = build_current(c, CurrentSign::plus, w);
    auto minus = build_current(c, CurrentSign::minus, w);
    for (int a = -6; a <= 6; ++a) CHECK(full.coefficient(a) == plus.coefficient(a) - minus.coefficient(a));
  }
}

TEST_CASE("every current relation family holds", "[currents]") {
  for (RelationId id : {RelationId::HH, RelationId::HK, RelationId::KK, RelationId::KE, RelationId::KF,
                        RelationId::EE, RelationId::FF, RelationId::HE, RelationId::HF}) {
    auto r = verify_current_relation(id, {-2, 2}, -12);
    INFO(to_string(id));
    CHECK(r.passed());
    CHECK(r.checks.size() >= 25);
  }
}

TEST_CASE("HE on a skewed window", "[currents]") {
  auto r = verify_current_relation(RelationId::HE, {-2, 3}, -12);
  CHECK(r.passed());
}

TEST_CASE("relation checker has teeth", "[currents]") {
  // Swapping the roles of H and its inverse direction must fail: compare
  // (u - v + 1) H E against (u - v + 1) E H instead.
  const ModeWindow w{-1, 1}, inner{-1, 2};
  const auto hs = build_current(GenClass::H, CurrentSign::plus, {-2, 2});
  const auto es = build_current(GenClass::E, CurrentSign::full, {-2, 2});
  auto hx = FormalDistribution2::product(hs, es, true, inner, inner, -10);
  auto xh = FormalDistribution2::product(hs, es, false, inner, inner, -10);
  auto bad = (hx.times_u() - hx.times_v() + hx) - (xh.times_u() - xh.times_v() + xh);
  bool any = false;
  for (int a = w.lo; a <= w.hi; ++a)
    for (int b = w.lo; b <= w.hi; ++b) any = any || !bad.coefficient(a, b).is_zero();
  CHECK(any);
}

TEST_CASE("EF delta identity", "[currents]") {
  auto r = verify_ef_delta({-3, 3}, -12);
  CHECK(r.passed());
  CHECK(r.checks.size() == 2 * 49);
}

TEST_CASE("delta distribution coefficients", "[currents]") {
  CurrentSeries one{GenClass::K, CurrentSign::plus, {0, 0}, {{-1, AlgebraElement(Scalar(1))}}};
  auto d = FormalDistribution2::delta_times(one, {-3, 3}, {-3, 3});
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      CHECK(d.coefficient(a, b) == AlgebraElement(Scalar(a + b == -1 ? 1 : 0)));
}

TEST_CASE("shallow floor is rejected", "[currents]") {
  try {
    verify_current_relation(RelationId::HE, {-4, 4}, -4);
    FAIL("expected floor-too-shallow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::floor_too_shallow);
  }
}
