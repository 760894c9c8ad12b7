#include "yangian/hopf/pairing.hpp"

#include <map>
#include <mutex>
#include <random>
#include <tuple>

#include "yangian/error.hpp"
#include "yangian/exactmath/rational_function.hpp"

namespace yangian {

Scalar PairingTable::base(const Generator& a, const Generator& b) {
  if (a.mode < 0 || b.mode >= 0)
    throw Error(ErrorCode::wrong_half, "base pairing of " + to_string(a) + " with " + to_string(b));
  const int j = -b.mode - 1;
  switch (a.cls) {
    case GenClass::E:
      return b.cls == GenClass::F && a.mode == j ? Scalar(-1) : Scalar(0);
    case GenClass::F:
      return b.cls == GenClass::E && a.mode == j ? Scalar(-1) : Scalar(0);
    case GenClass::H:
    case GenClass::K: {
      GenClass partner = a.cls == GenClass::H ? GenClass::K : GenClass::H;
      if (b.cls != partner || j > a.mode) return 0;
      Scalar v(binomial(a.mode, j));
      return ((a.mode - j) % 2 ? Scalar(-2) : Scalar(2)) * v;
    }
  }
  return 0;
}

int plus_weight(const Word& w) {
  int s = 0;
  for (const auto& g : w) s += g.mode + 1;
  return s;
}

namespace {

void check_half(const Word& w, bool plus) {
  for (const auto& g : w)
    if ((g.mode >= 0) != plus)
      throw Error(ErrorCode::wrong_half, to_string(g) + (plus ? " is not in the mode >= 0 half"
                                                              : " is not in the mode < 0 half"));
}

std::mutex memo_mutex;
std::map<std::tuple<Word, Word, DeltaShift, EfDressing>, Scalar> memo;

Scalar pair_words(const Word& a, const Word& c, DeltaConvention conv) {
  if (a.empty() || c.empty()) return (a.empty() && c.empty()) ? Scalar(1) : Scalar(0);
  if (-mode_sum(c) > plus_weight(a)) return 0;
  if (a.size() == 1 && c.size() == 1) return PairingTable::base(a[0], c[0]);
  auto key = std::make_tuple(a, c, conv.shift, conv.dressing);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  Scalar total;
  if (c.size() >= 2) {
    const Word c1{c[0]};
    const Word rest(c.begin() + 1, c.end());
    TensorElement da = coproduct(AlgebraElement::from_word(a), {}, conv);
    for (const auto& [k, x] : da.terms()) {
      Scalar p1 = pair_words(k[0], c1, conv);
      if (p1.is_zero()) continue;
      Scalar p2 = pair_words(k[1], rest, conv);
      if (p2.is_zero()) continue;
      total += x * p1 * p2;
    }
  } else {
    const Word a1{a[0]};
    const Word rest(a.begin() + 1, a.end());
    std::vector<FloorConstraint> floors{{leg_bit(0), -plus_weight(rest)}, {leg_bit(1), -plus_weight(a1)}};
    TensorElement dc = coproduct(c[0], floors, conv);
    for (const auto& [k, x] : dc.terms()) {
      Scalar p1 = pair_words(rest, k[0], conv);
      if (p1.is_zero()) continue;
      Scalar p2 = pair_words(a1, k[1], conv);
      if (p2.is_zero()) continue;
      total += x * p1 * p2;
    }
    total *= Scalar(sign_of(parity(a1), parity(rest)));
  }
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(key, total);
  return total;
}

}  // namespace

Scalar pairing(const Word& a, const Word& b, DeltaConvention conv) {
  check_half(a, true);
  check_half(b, false);
  return pair_words(a, b, conv);
}

Scalar pairing(const AlgebraElement& a, const AlgebraElement& b, DeltaConvention conv) {
  if (a.truncated()) throw Error(ErrorCode::floor_too_shallow, "pairing needs an exact left argument");
  for (const auto& [w, x] : a.terms()) check_half(w, true);
  for (const auto& [w, x] : b.terms()) check_half(w, false);
  Scalar total;
  for (const auto& [wa, xa] : a.terms()) {
    if (b.truncated() && b.floor() > -plus_weight(wa))
      throw Error(ErrorCode::floor_too_shallow,
                  "right argument is exact only at mode >= " + std::to_string(b.floor()));
    for (const auto& [wb, xb] : b.terms()) total += xa * xb * pair_words(wa, wb, conv);
  }
  return total;
}

Scalar pairing(const TensorElement& a, const TensorElement& b, DeltaConvention conv) {
  if (a.legs() != 2 || b.legs() != 2) throw Error(ErrorCode::leg_mismatch, "tensor pairing needs two legs");
  Scalar total;
  for (const auto& [ka, xa] : a.terms()) {
    check_half(ka[0], true);
    check_half(ka[1], true);
    for (const auto& [kb, xb] : b.terms()) {
      check_half(kb[0], false);
      check_half(kb[1], false);
      Scalar p1 = pair_words(ka[0], kb[0], conv);
      if (p1.is_zero()) continue;
      Scalar p2 = pair_words(ka[1], kb[1], conv);
      if (p2.is_zero()) continue;
      total += xa * xb * p1 * p2;
    }
  }
  return total;
}

std::vector<PairingSample> pairing_samples(int count, int max_mode, unsigned seed) {
  std::vector<PairingSample> out;
  out.push_back({{e(0)}, {f(0)}, {k(-1)}, {}});
  out.push_back({{h(0)}, {}, {k(-1)}, {k(-1)}});
  out.push_back({{e(0)}, {h(1)}, {k(-1)}, {f(-2)}});
  std::mt19937 rng(seed);
  const GenClass classes[] = {GenClass::E, GenClass::F, GenClass::H, GenClass::K};
  std::uniform_int_distribution<int> cls(0, 3), mode(0, max_mode), coin(0, 3);
  auto plus = [&] { return Generator{classes[cls(rng)], mode(rng)}; };
  auto minus = [&] { return Generator{classes[cls(rng)], -mode(rng) - 1}; };
  // Dual partner of a generator; most such pairings are nonzero.
  auto partner = [&](const Generator& g) {
    switch (g.cls) {
      case GenClass::E: return f(-g.mode - 1);
      case GenClass::F: return e(-g.mode - 1);
      case GenClass::H: return k(-std::uniform_int_distribution<int>(0, g.mode)(rng) - 1);
      case GenClass::K: return h(-std::uniform_int_distribution<int>(0, g.mode)(rng) - 1);
    }
    return g;
  };
  while (static_cast<int>(out.size()) < count) {
    PairingSample s{{plus()}, {plus()}, {}, {}};
    if (coin(rng) == 0) {
      s.c = {minus()};
      s.d = {minus()};
    } else {
      s.c = {partner(s.a[0])};
      s.d = {partner(s.b[0])};
      if (coin(rng) % 2) std::swap(s.c, s.d);
    }
    out.push_back(s);
  }
  return out;
}

namespace {

Word concat(const Word& x, const Word& y) {
  Word w = x;
  w.insert(w.end(), y.begin(), y.end());
  return w;
}

}  // namespace

Report verify_pairing_axiom(const std::vector<PairingSample>& samples, int order, DeltaConvention conv) {
  Report rep;
  rep.suite = "pairing";
  rep.config = {{"samples", samples.size()}, {"order", order}, {"convention", to_json(conv)}};
  for (const auto& s : samples) {
    const int wa = plus_weight(s.a), wb = plus_weight(s.b);
    AlgebraElement ab = multiply(AlgebraElement::from_word(s.a), AlgebraElement::from_word(s.b));
    AlgebraElement cd = multiply(AlgebraElement::from_word(s.c), AlgebraElement::from_word(s.d),
                                 -(wa + wb) - order);
    Scalar direct = pairing(ab, cd, conv);
    Scalar via_left = pairing(coproduct(ab, {}, conv), TensorElement::pure({AlgebraElement::from_word(s.c),
                                                                             AlgebraElement::from_word(s.d)}),
                              conv);
    std::vector<FloorConstraint> floors{{leg_bit(0), -wb - order}, {leg_bit(1), -wa - order}};
    TensorElement dcd = coproduct(AlgebraElement::from_word(concat(s.c, s.d)), floors, conv);
    Scalar via_right = Scalar(sign_of(parity(s.a), parity(s.b))) * pairing(TensorElement::pure({AlgebraElement::from_word(s.b), AlgebraElement::from_word(s.a)}),
                               dcd, conv);
    std::string name = "<" + to_string(concat(s.a, s.b)) + "," + to_string(concat(s.c, s.d)) + ">";
    nlohmann::ordered_json params = {{"a", to_string(s.a)}, {"b", to_string(s.b)},
                                     {"c", to_string(s.c)}, {"d", to_string(s.d)},
                                     {"value", direct.to_string()}};
    bool ok = direct == via_left && direct == via_right;
    rep.add(name, params, ok,
            ok ? "" : "direct " + direct.to_string() + ", <D(ab),c*(x)d*> " + via_left.to_string() +
                          ", <flip(a(x)b),D(c*d*)> " + via_right.to_string());
  }
  return rep;
}

Report verify_pairing_table(int max_index) {
  Report rep;
  rep.suite = "pairing-table";
  rep.config = {{"max_index", max_index}};
  const auto u = RationalFunction::variable(Var::u), v = RationalFunction::variable(Var::v);
  // <E+(u), F-(v)> = <F+(u), E-(v)> = 1/(u-v); <H+(u), K-(v)> = <K+(u), H-(v)> = (u-v-1)/(u-v+1).
  const RegionSeries odd = series_expand((u - v).invert(), Var::u, Region::at_infinity, max_index + 1);
  const RegionSeries even =
      series_expand((u - v - 1) / (u - v + 1), Var::u, Region::at_infinity, max_index + 1);
  auto coeff = [](const RegionSeries& s, int m, int j) {
    RationalFunction c = s.coefficient(-m - 1);
    Polynomial p = c.numerator().coefficient(Var::v, j);
    return Scalar(mpq_class(p.constant_term(), c.denominator().constant_term()));
  };
  for (int m = 0; m <= max_index; ++m)
    for (int j = 0; j <= max_index; ++j) {
      // Minus currents carry a leading minus sign on every mode.
      Scalar want_odd = -coeff(odd, m, j), want_even = -coeff(even, m, j);
      const std::pair<Generator, Generator> pairs[] = {
          {e(m), f(-j - 1)}, {f(m), e(-j - 1)}, {h(m), k(-j - 1)}, {k(m), h(-j - 1)}};
      for (const auto& [a, b] : pairs) {
        Scalar got = PairingTable::base(a, b);
        Scalar want = a.cls == GenClass::E || a.cls == GenClass::F ? want_odd : want_even;
        rep.add("table<" + to_string(a) + "," + to_string(b) + ">", {{"m", m}, {"j", j}}, got == want,
                got == want ? "" : "table " + got.to_string() + ", expansion " + want.to_string());
      }
      for (const auto& [a, b] : {std::pair{e(m), e(-j - 1)}, std::pair{e(m), h(-j - 1)},
                                 std::pair{h(m), h(-j - 1)}, std::pair{k(m), f(-j - 1)}}) {
        bool ok = PairingTable::base(a, b).is_zero();
        rep.add("orthogonal<" + to_string(a) + "," + to_string(b) + ">", {{"m", m}, {"j", j}}, ok);
      }
    }
  RationalFunction unit = even.coefficient(0);
  rep.add("unit<1,1>", {}, unit == RationalFunction(1), unit == RationalFunction(1) ? "" : unit.to_string());
  return rep;
}

}  // namespace yangian
