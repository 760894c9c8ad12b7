#include "yangian/currents/currents.hpp"

#include <sstream>

#include "yangian/error.hpp"

namespace yangian {

const char* to_string(CurrentSign s) {
  switch (s) {
    case CurrentSign::plus: return "+";
    case CurrentSign::minus: return "-";
    case CurrentSign::full: return "full";
  }
  return "?";
}

AlgebraElement CurrentSeries::coefficient(int a) const {
  auto it = coefficients.find(a);
  return it == coefficients.end() ? AlgebraElement() : it->second;
}

std::string CurrentSeries::to_string(char var) const {
  std::ostringstream os;
  bool first = true;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")";
    const int p = -it->first - 1;
    if (p != 0) os << "*" << var << "^" << p;
  }
  return first ? "0" : os.str();
}

CurrentSeries build_current(GenClass cls, CurrentSign sign, ModeWindow window) {
  if (sign == CurrentSign::full && (cls == GenClass::H || cls == GenClass::K))
    throw Error(ErrorCode::config_invalid, "full currents exist only for E and F");
  CurrentSeries s{cls, sign, window, {}};
  auto add = [&s](int a, const AlgebraElement& x) {
    auto& slot = s.coefficients[a];
    slot += x;
    if (slot.is_zero()) s.coefficients.erase(a);
  };
  if (cls == GenClass::H || cls == GenClass::K) add(-1, Scalar(1));
  for (int n = window.lo; n <= window.hi; ++n) {
    const Generator g{cls, n};
    switch (sign) {
      case CurrentSign::plus:
        if (n >= 0) add(n, g);
        break;
      case CurrentSign::minus:
        if (n < 0) add(n, -AlgebraElement(g));
        break;
      case CurrentSign::full:
        add(n, g);
        break;
    }
  }
  return s;
}

AlgebraElement FormalDistribution2::coefficient(int a, int b) const {
  auto it = coeffs_.find({a, b});
  return it == coeffs_.end() ? AlgebraElement() : it->second;
}

void FormalDistribution2::set(int a, int b, AlgebraElement c) {
  if (c.is_zero() && !c.truncated()) {
    coeffs_.erase({a, b});
    return;
  }
  coeffs_[{a, b}] = std::move(c);
}

FormalDistribution2 FormalDistribution2::product(const CurrentSeries& a_u, const CurrentSeries& b_v,
                                                 bool a_first, ModeWindow a, ModeWindow b,
                                                 int floor) {
  FormalDistribution2 d(a, b);
  for (int i = a.lo; i <= a.hi; ++i) {
    const AlgebraElement x = a_u.coefficient(i);
    if (x.is_zero()) continue;
    for (int j = b.lo; j <= b.hi; ++j) {
      const AlgebraElement y = b_v.coefficient(j);
      if (y.is_zero()) continue;
      d.set(i, j, a_first ? multiply(x, y, floor) : multiply(y, x, floor));
    }
  }
  return d;
}

FormalDistribution2 FormalDistribution2::delta_times(const CurrentSeries& g, ModeWindow a,
                                                     ModeWindow b) {
  FormalDistribution2 d(a, b);
  for (int i = a.lo; i <= a.hi; ++i)
    for (int j = b.lo; j <= b.hi; ++j) d.set(i, j, g.coefficient(i + j));
  return d;
}

FormalDistribution2 FormalDistribution2::times_u() const {
  FormalDistribution2 d({a_.lo, a_.hi - 1}, b_);
  for (const auto& [ab, c] : coeffs_)
    if (ab.first - 1 >= a_.lo) d.set(ab.first - 1, ab.second, c);
  return d;
}

FormalDistribution2 FormalDistribution2::times_v() const {
  FormalDistribution2 d(a_, {b_.lo, b_.hi - 1});
  for (const auto& [ab, c] : coeffs_)
    if (ab.second - 1 >= b_.lo) d.set(ab.first, ab.second - 1, c);
  return d;
}

FormalDistribution2& FormalDistribution2::operator+=(const FormalDistribution2& o) {
  a_ = {std::max(a_.lo, o.a_.lo), std::min(a_.hi, o.a_.hi)};
  b_ = {std::max(b_.lo, o.b_.lo), std::min(b_.hi, o.b_.hi)};
  for (const auto& [ab, c] : o.coeffs_) {
    AlgebraElement sum = coefficient(ab.first, ab.second) + c;
    set(ab.first, ab.second, std::move(sum));
  }
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = (a_.contains(it->first.first) && b_.contains(it->first.second)) ? std::next(it)
                                                                         : coeffs_.erase(it);
  return *this;
}

FormalDistribution2& FormalDistribution2::operator-=(const FormalDistribution2& o) {
  return *this += o * Scalar(-1);
}

FormalDistribution2 FormalDistribution2::operator*(const Scalar& c) const {
  FormalDistribution2 d = *this;
  for (auto& [ab, x] : d.coeffs_) x *= c;
  return d;
}

const char* to_string(RelationId id) {
  switch (id) {
    case RelationId::HH: return "HH";
    case RelationId::HK: return "HK";
    case RelationId::KK: return "KK";
    case RelationId::KE: return "KE";
    case RelationId::KF: return "KF";
    case RelationId::EE: return "EE";
    case RelationId::FF: return "FF";
    case RelationId::HE: return "HE";
    case RelationId::HF: return "HF";
  }
  return "?";
}

RelationId parse_relation_id(const std::string& s) {
  for (RelationId id : {RelationId::HH, RelationId::HK, RelationId::KK, RelationId::KE,
                        RelationId::KF, RelationId::EE, RelationId::FF, RelationId::HE,
                        RelationId::HF})
    if (s == to_string(id)) return id;
  throw Error(ErrorCode::config_invalid, "unknown relation '" + s + "'");
}

namespace {

void require_floor(ModeWindow w, int floor) {
  if (floor >= 2 * w.lo)
    throw Error(ErrorCode::floor_too_shallow,
                "floor " + std::to_string(floor) + " does not reach below the window's lowest mode sum " +
                    std::to_string(2 * w.lo));
}

void record(Report& r, const std::string& name, int a, int b, const AlgebraElement& residual) {
  nlohmann::ordered_json p{{"a", a}, {"b", b}};
  if (residual.truncated()) p["verified_floor"] = residual.floor();
  r.add(name + "(" + std::to_string(a) + "," + std::to_string(b) + ")", std::move(p),
        residual.is_zero(), residual.to_string());
}

void check_all(Report& r, const std::string& name, const FormalDistribution2& residual,
               ModeWindow w) {
  for (int a = w.lo; a <= w.hi; ++a)
    for (int b = w.lo; b <= w.hi; ++b) record(r, name, a, b, residual.coefficient(a, b));
}

/// [X(u), Y(v)]_{+-} with the sign of the super commutator.
FormalDistribution2 bracket(const CurrentSeries& x, const CurrentSeries& y, bool anti,
                            ModeWindow w, int floor) {
  auto xy = FormalDistribution2::product(x, y, true, w, w, floor);
  auto yx = FormalDistribution2::product(x, y, false, w, w, floor);
  return anti ? xy + yx : xy - yx;
}

}  // namespace

Report verify_current_relation(RelationId id, ModeWindow w, int floor,
                               const CurrentProvider& currents) {
  require_floor(w, floor);
  Report r;
  r.suite = std::string("current-relation-") + to_string(id);
  const ModeWindow wide{w.lo - 1, w.hi + 1};
  const CurrentSign signs[2] = {CurrentSign::plus, CurrentSign::minus};
  auto cartan_pair = [&](GenClass c1, GenClass c2) {
    for (CurrentSign s1 : signs)
      for (CurrentSign s2 : signs) {
        auto res = bracket(currents(c1, s1, wide), currents(c2, s2, wide), false, w, floor);
        check_all(r, std::string(to_string(id)) + "[" + to_string(s1) + to_string(s2) + "]", res, w);
      }
  };
  switch (id) {
    case RelationId::HH: cartan_pair(GenClass::H, GenClass::H); break;
    case RelationId::HK: cartan_pair(GenClass::H, GenClass::K); break;
    case RelationId::KK: cartan_pair(GenClass::K, GenClass::K); break;
    case RelationId::KE:
    case RelationId::KF: {
      const GenClass x = id == RelationId::KE ? GenClass::E : GenClass::F;
      for (CurrentSign s : signs) {
        auto res = bracket(currents(GenClass::K, s, wide), currents(x, CurrentSign::full, wide),
                           false, w, floor);
        check_all(r, std::string(to_string(id)) + "[" + to_string(s) + "]", res, w);
      }
      break;
    }
    case RelationId::EE:
    case RelationId::FF: {
      const GenClass x = id == RelationId::EE ? GenClass::E : GenClass::F;
      const auto cur = currents(x, CurrentSign::full, wide);
      check_all(r, to_string(id), bracket(cur, cur, true, w, floor), w);
      break;
    }
    case RelationId::HE:
    case RelationId::HF: {
      // (u - v + s) H(u) X(v) = (u - v - s) X(v) H(u), s = +1 for E and -1 for F.
      const GenClass x = id == RelationId::HE ? GenClass::E : GenClass::F;
      const int s = id == RelationId::HE ? 1 : -1;
      const ModeWindow inner{w.lo, w.hi + 1};
      const auto xs = currents(x, CurrentSign::full, wide);
      for (CurrentSign sg : signs) {
        const auto hs = currents(GenClass::H, sg, wide);
        auto hx = FormalDistribution2::product(hs, xs, true, inner, inner, floor);
        auto xh = FormalDistribution2::product(hs, xs, false, inner, inner, floor);
        auto lhs = hx.times_u() - hx.times_v() + hx * Scalar(s);
        auto rhs = xh.times_u() - xh.times_v() - xh * Scalar(s);
        check_all(r, std::string(to_string(id)) + "[" + to_string(sg) + "]", lhs - rhs, w);
      }
      break;
    }
  }
  return r;
}

Report verify_ef_delta(ModeWindow w, int floor, const CurrentProvider& currents) {
  require_floor(w, floor);
  Report r;
  r.suite = "ef-delta";
  const ModeWindow wide{2 * w.lo - 1, 2 * w.hi + 1};
  const auto e_full = currents(GenClass::E, CurrentSign::full, wide);
  const auto f_full = currents(GenClass::F, CurrentSign::full, wide);
  const auto lhs = bracket(e_full, f_full, true, w, floor);
  const auto rhs = FormalDistribution2::delta_times(currents(GenClass::K, CurrentSign::minus, wide), w, w) -
                   FormalDistribution2::delta_times(currents(GenClass::K, CurrentSign::plus, wide), w, w);
  for (int a = w.lo; a <= w.hi; ++a)
    for (int b = w.lo; b <= w.hi; ++b) {
      const AlgebraElement want = -AlgebraElement(k(a + b));
      const AlgebraElement got = rhs.coefficient(a, b);
      nlohmann::ordered_json p{{"a", a}, {"b", b}};
      r.add("delta-reduction(" + std::to_string(a) + "," + std::to_string(b) + ")", p, got == want,
            got.to_string());
      record(r, "EF", a, b, lhs.coefficient(a, b) - got);
    }
  return r;
}

}  // namespace yangian
