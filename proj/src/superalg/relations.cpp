#include "yangian/superalg/relations.hpp"

#include <chrono>

namespace yangian {

namespace {

AlgebraElement pair_word(Generator a, Generator b, long c) {
  return AlgebraElement::from_word({a, b}, Scalar(c));
}

/// [a, b} = ab - (-1)^{|a||b|} ba on raw words.
AlgebraElement raw_bracket(Generator a, Generator b) {
  return pair_word(a, b, 1) + pair_word(b, a, -sign_of(a.parity(), b.parity()));
}

AlgebraElement raw_anti(Generator a, Generator b) { return pair_word(a, b, 1) + pair_word(b, a, 1); }

}  // namespace

std::string DefiningRelation::name() const {
  return family + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

std::vector<DefiningRelation> defining_relations(int lo, int hi) {
  std::vector<DefiningRelation> out;
  for (int m = lo; m <= hi; ++m)
    for (int n = lo; n <= hi; ++n) {
      out.push_back({"hh", m, n, raw_bracket(h(m), h(n))});
      out.push_back({"hk", m, n, raw_bracket(h(m), k(n))});
      out.push_back({"kk", m, n, raw_bracket(k(m), k(n))});
      out.push_back({"ke", m, n, raw_bracket(k(m), e(n))});
      out.push_back({"kf", m, n, raw_bracket(k(m), f(n))});
      out.push_back({"he", m, n,
                     raw_bracket(h(m + 1), e(n)) - raw_bracket(h(m), e(n + 1)) + raw_anti(h(m), e(n))});
      out.push_back({"hf", m, n,
                     raw_bracket(h(m + 1), f(n)) - raw_bracket(h(m), f(n + 1)) - raw_anti(h(m), f(n))});
      out.push_back({"ee", m, n, raw_bracket(e(m), e(n))});
      out.push_back({"ff", m, n, raw_bracket(f(m), f(n))});
      out.push_back({"ef", m, n, raw_bracket(e(m), f(n)) + AlgebraElement(k(m + n))});
    }
  for (int n = lo; n <= hi; ++n) {
    out.push_back({"h0e", 0, n, raw_bracket(h(0), e(n)) + AlgebraElement(e(n)) * Scalar(2)});
    out.push_back({"h0f", 0, n, raw_bracket(h(0), f(n)) - AlgebraElement(f(n)) * Scalar(2)});
  }
  return out;
}

Report verify_defining_relations(int lo, int hi, int floor) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.suite = "relations";
  r.config = {{"window", {lo, hi}}, {"floor", floor}};
  for (const auto& rel : defining_relations(lo, hi)) {
    const AlgebraElement residual = normal_order(rel.raw, floor);
    nlohmann::ordered_json p{{"m", rel.m}, {"n", rel.n}};
    if (residual.truncated()) p["verified_floor"] = residual.floor();
    r.add(rel.name(), std::move(p), residual.is_zero(), residual.to_string());
  }
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace yangian
