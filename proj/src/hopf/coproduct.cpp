#include "yangian/hopf/coproduct.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "yangian/error.hpp"

namespace yangian {

const char* to_string(DeltaShift s) { return s == DeltaShift::minus ? "minus" : "plus"; }

const char* to_string(EfDressing d) { return d == EfDressing::k ? "k" : "h"; }

EfDressing parse_ef_dressing(const std::string& s) {
  if (s == "k" || s == "K") return EfDressing::k;
  if (s == "h" || s == "H") return EfDressing::h;
  throw Error(ErrorCode::config_invalid, "coproduct dressing must be k or h, got '" + s + "'");
}

nlohmann::ordered_json to_json(const DeltaConvention& c) {
  return {{"delta_shift", to_string(c.shift)}, {"ef_dressing", to_string(c.dressing)}};
}

DeltaShift parse_delta_shift(const std::string& s) {
  if (s == "minus" || s == "-1") return DeltaShift::minus;
  if (s == "plus" || s == "+1" || s == "1") return DeltaShift::plus;
  throw Error(ErrorCode::config_invalid, "delta shift must be minus or plus, got '" + s + "'");
}

namespace {

constexpr unsigned kBoth = 3u;

using ConstraintKey = std::vector<std::pair<unsigned, int>>;

ConstraintKey key_of(const std::vector<FloorConstraint>& cs) {
  ConstraintKey k;
  for (const auto& c : cs) k.emplace_back(c.legs, c.floor);
  std::sort(k.begin(), k.end());
  return k;
}

std::mutex cache_mutex;
std::map<std::tuple<Generator, ConstraintKey, DeltaShift, EfDressing>, TensorElement> generator_cache;

/// Lower bound on the mode of leg `leg` implied by `cs`, given that every
/// other leg of a term has mode at most `other_max`.
int lookahead(const std::vector<FloorConstraint>& cs, int leg, int other_max) {
  int best = kNoFloor;
  for (const auto& c : cs) {
    if (!(c.legs & leg_bit(leg))) continue;
    int others = __builtin_popcount(c.legs) - 1;
    best = std::max(best, c.floor - others * other_max);
  }
  return best;
}

/// Terms x_a (x) y_b over a + b = total, with a, b in the mode ranges of one half.
void add_split(TensorElement& t, GenClass left, GenClass right, bool plus, int total, const Scalar& c) {
  for (int a = 0; a <= total; ++a) {
    int b = total - a;
    Generator l{left, plus ? a : -a - 1}, r{right, plus ? b : -b - 1};
    t.add_term({Word{l}, Word{r}}, c);
  }
}

/// Coefficient of u^{-p} (plus) or u^p (minus) of X(u+s) for X in {E, F}.
AlgebraElement shifted_current(GenClass cls, bool plus, int p, int s, int mode_floor) {
  AlgebraElement x;
  if (plus) {
    for (int a = 0; a <= p - 1; ++a) {
      int i = p - 1 - a;
      Scalar c(binomial(p - 1, i));
      c *= Scalar(-s).pow(i);
      x += AlgebraElement(Generator{cls, a}) * c;
    }
  } else {
    for (int j = p; -j - 1 >= mode_floor; ++j) {
      Scalar c(binomial(j, p));
      c *= Scalar(s).pow(j - p);
      x -= AlgebraElement(Generator{cls, -j - 1}) * c;
    }
  }
  return x;
}

/// Coefficient of u^{-p} (plus) or u^p (minus) of H(u), unit included.
AlgebraElement h_current(bool plus, int p) {
  if (plus) return p == 0 ? AlgebraElement(Scalar(1)) : AlgebraElement(h(p - 1));
  return AlgebraElement(Scalar(p == 0 ? 1 : 0)) - AlgebraElement(h(-p - 1));
}

TensorElement compute_generator(const Generator& g, const std::vector<FloorConstraint>& cs,
                                DeltaConvention conv) {
  const bool plus = g.mode >= 0;
  const int n = g.mode;
  const int total = plus ? n - 1 : -n - 1;  // a + b for the split sums
  const Scalar split_sign = plus ? Scalar(1) : Scalar(-1);
  const GenClass dress = conv.dressing == EfDressing::k ? GenClass::K : GenClass::H;
  TensorElement t(2);
  for (const auto& c : cs) t.impose(c);
  Word w{g};
  t.add_term({w, Word{}}, Scalar(1));
  t.add_term({Word{}, w}, Scalar(1));
  switch (g.cls) {
    case GenClass::E:
      add_split(t, dress, GenClass::E, plus, total, split_sign);
      break;
    case GenClass::F:
      add_split(t, GenClass::F, dress, plus, total, split_sign);
      break;
    case GenClass::K:
      add_split(t, GenClass::K, GenClass::K, plus, total, split_sign);
      break;
    case GenClass::H: {
      add_split(t, GenClass::H, GenClass::H, plus, total, split_sign);
      const int s = shift_value(conv.shift);
      // Correction -2 (X (x) Y) with X = F(u+s)H(u), Y = H(u)E(u+s).
      int f1 = kNoFloor, f2 = kNoFloor;
      int lo = 1, hi = n;  // plus: X_p (x) Y_q with p + q = n + 1, p, q >= 1
      if (!plus) {
        f1 = lookahead(cs, 0, -1);
        f2 = lookahead(cs, 1, -1);
        if (f1 <= kNoFloor / 2 || f2 <= kNoFloor / 2)
          throw Error(ErrorCode::floor_too_shallow,
                      "coproduct of " + to_string(g) + " needs a floor on both legs");
        lo = 0;
        hi = -n - 1;
      }
      const int sum = plus ? n + 1 : -n - 1;
      const Scalar corr = plus ? Scalar(-2) : Scalar(2);
      for (int p = lo; p <= hi; ++p) {
        int q = sum - p;
        AlgebraElement x, y;
        for (int p1 = plus ? 1 : 0; p1 <= p; ++p1) {
          AlgebraElement fp = shifted_current(GenClass::F, plus, p1, s, f1);
          if (fp.is_zero()) continue;
          x += multiply(fp, h_current(plus, p - p1), f1);
        }
        for (int q1 = plus ? 1 : 0; q1 <= q; ++q1) {
          AlgebraElement eq = shifted_current(GenClass::E, plus, q1, s, f2);
          if (eq.is_zero()) continue;
          y += multiply(h_current(plus, q - q1), eq, f2);
        }
        if (x.is_zero() || y.is_zero()) continue;
        t.add_product({&x, &y}, corr);
      }
      break;
    }
  }
  return t;
}

int letter_bound(const Generator& g, unsigned mask) {
  return mask == kBoth ? g.mode : std::max(g.mode, 0);
}

TensorElement coproduct_word(const Word& w, const std::vector<FloorConstraint>& cs, DeltaConvention conv) {
  if (w.empty()) {
    TensorElement u = TensorElement::unit(2);
    for (const auto& c : cs) u.impose(c);
    return u;
  }
  TensorElement acc;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::vector<FloorConstraint> ci;
    for (const auto& c : cs) {
      long floor = c.floor;
      for (std::size_t j = 0; j < w.size(); ++j)
        if (j != i) floor -= letter_bound(w[j], c.legs);
      ci.push_back({c.legs, static_cast<int>(std::max<long>(floor, kNoFloor))});
    }
    TensorElement d = coproduct(w[i], ci, conv);
    acc = i == 0 ? d : tensor_multiply(acc, d, cs);
  }
  for (const auto& c : cs) acc.impose(c);
  return acc;
}

}  // namespace

TensorElement coproduct(const Generator& g, const std::vector<FloorConstraint>& floors,
                        DeltaConvention conv) {
  auto key = std::make_tuple(g, key_of(floors), conv.shift, conv.dressing);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = generator_cache.find(key);
    if (it != generator_cache.end()) return it->second;
  }
  TensorElement t = compute_generator(g, floors, conv);
  std::lock_guard<std::mutex> lock(cache_mutex);
  generator_cache.emplace(key, t);
  return t;
}

TensorElement coproduct(const Generator& g, int order, DeltaConvention conv) {
  if (g.mode >= 0) return coproduct(g, std::vector<FloorConstraint>{}, conv);
  return coproduct(g, std::vector<FloorConstraint>{{kBoth, g.mode - order}}, conv);
}

TensorElement coproduct(const AlgebraElement& x, const std::vector<FloorConstraint>& floors,
                        DeltaConvention conv) {
  std::vector<FloorConstraint> cs = floors;
  if (x.truncated()) cs.push_back({kBoth, x.floor()});
  TensorElement r(2);
  for (const auto& c : cs) r.impose(c);
  for (const auto& [w, c] : x.terms()) r += coproduct_word(w, cs, conv) * c;
  return r;
}

TensorElement apply_coproduct(const TensorElement& t, int leg,
                              const std::vector<FloorConstraint>& floors, DeltaConvention conv) {
  const int legs = t.legs();
  if (leg < 0 || leg >= legs) throw Error(ErrorCode::leg_mismatch, "no such leg");
  const unsigned low = leg_bit(leg) - 1;
  auto expand = [&](unsigned m) {
    unsigned r = (m & low) | ((m & ~low) << 1);
    if (m & leg_bit(leg)) r |= leg_bit(leg + 1);
    return r;
  };
  TensorElement r(legs + 1);
  std::vector<FloorConstraint> cs = floors;
  for (const auto& c : t.constraints()) cs.push_back({expand(c.legs), c.floor});
  for (const auto& c : cs) r.impose(c);
  std::map<std::pair<Word, ConstraintKey>, TensorElement> cache;
  for (const auto& [key, coeff] : t.terms()) {
    TensorElement::Key out(legs + 1);
    for (int i = 0; i < legs; ++i) {
      if (i < leg) out[i] = key[i];
      if (i > leg) out[i + 1] = key[i];
    }
    std::vector<FloorConstraint> sub;
    for (const auto& c : r.constraints()) {
      unsigned m2 = (c.legs >> leg) & 3u;
      if (!m2) continue;
      long floor = c.floor;
      for (int i = 0; i <= legs; ++i)
        if (i != leg && i != leg + 1 && (c.legs & leg_bit(i))) floor -= mode_sum(out[i]);
      sub.push_back({m2, static_cast<int>(std::max<long>(floor, kNoFloor))});
    }
    auto ck = std::make_pair(key[leg], key_of(sub));
    auto it = cache.find(ck);
    if (it == cache.end()) it = cache.emplace(ck, coproduct_word(key[leg], sub, conv)).first;
    for (const auto& [k2, c2] : it->second.terms()) {
      out[leg] = k2[0];
      out[leg + 1] = k2[1];
      if (r.reliable(out)) r.add_term(out, coeff * c2);
    }
  }
  return r;
}

namespace {

std::vector<Generator> generators_in(int max_mode) {
  std::vector<Generator> gs;
  for (GenClass c : {GenClass::E, GenClass::F, GenClass::H, GenClass::K})
    for (int n = -max_mode; n <= max_mode; ++n) gs.push_back({c, n});
  return gs;
}

std::string residual(const TensorElement& a, const TensorElement& b) {
  TensorElement d = a - b;
  return d.to_string(4);
}

}  // namespace

Report verify_coassociativity(int max_mode, int order, DeltaConvention conv) {
  Report rep;
  rep.suite = "coassociativity";
  rep.config = {{"max_mode", max_mode}, {"order", order}, {"convention", to_json(conv)}};
  for (const auto& g : generators_in(max_mode)) {
    int floor = std::min(g.mode, 0) - order;
    std::vector<FloorConstraint> c3{{7u, floor}};
    TensorElement d = coproduct(g, std::vector<FloorConstraint>{{kBoth, floor}}, conv);
    TensorElement left = apply_coproduct(d, 0, c3, conv);
    TensorElement right = apply_coproduct(d, 1, c3, conv);
    bool ok = left == right;
    nlohmann::ordered_json params = {{"generator", to_string(g)}};
    if (!left.is_exact() || !right.is_exact()) params["verified_floor"] = floor;
    rep.add("coassoc(" + to_string(g) + ")", params, ok, ok ? "" : residual(left, right));
  }
  return rep;
}

Report verify_homomorphism(int max_mode, int order, DeltaConvention conv) {
  Report rep;
  rep.suite = "homomorphism";
  rep.config = {{"max_mode", max_mode}, {"order", order}, {"convention", to_json(conv)}};
  const auto gs = generators_in(max_mode);
  for (const auto& x : gs)
    for (const auto& y : gs) {
      int floor = std::min(x.mode, 0) + std::min(y.mode, 0) - order;
      std::vector<FloorConstraint> cs{{kBoth, floor}};
      TensorElement dx = coproduct(x, std::vector<FloorConstraint>{{kBoth, floor - y.mode}}, conv);
      TensorElement dy = coproduct(y, std::vector<FloorConstraint>{{kBoth, floor - x.mode}}, conv);
      TensorElement left = tensor_multiply(dx, dy, cs);
      AlgebraElement xy = multiply(AlgebraElement(x), AlgebraElement(y), floor);
      TensorElement right = coproduct(xy, cs, conv);
      bool ok = left == right;
      nlohmann::ordered_json params = {{"x", to_string(x)}, {"y", to_string(y)}};
      if (!left.is_exact() || !right.is_exact()) params["verified_floor"] = floor;
      rep.add("hom(" + to_string(x) + "," + to_string(y) + ")", params, ok,
              ok ? "" : residual(left, right));
    }
  return rep;
}

}  // namespace yangian
