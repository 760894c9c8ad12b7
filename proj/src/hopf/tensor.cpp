#include "yangian/hopf/tensor.hpp"

#include <algorithm>
#include <sstream>

#include "yangian/error.hpp"

namespace yangian {

namespace {

int clamp(long v) { return static_cast<int>(std::clamp<long>(v, kNoFloor, -kNoFloor)); }

void merge_constraint(std::vector<FloorConstraint>& cs, FloorConstraint c) {
  if (c.floor <= kNoFloor) return;
  for (auto& x : cs)
    if (x.legs == c.legs) {
      x.floor = std::max(x.floor, c.floor);
      return;
    }
  cs.push_back(c);
  std::sort(cs.begin(), cs.end(), [](const FloorConstraint& a, const FloorConstraint& b) {
    return a.legs < b.legs;
  });
}

}  // namespace

Parity parity(const TensorElement::Key& k) {
  Parity p = Parity::even;
  for (const auto& w : k) p = p + parity(w);
  return p;
}

int mode_sum(const TensorElement::Key& k, unsigned legs) {
  int s = 0;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (legs & leg_bit(static_cast<int>(i))) s += mode_sum(k[i]);
  return s;
}

bool satisfies(const TensorElement::Key& k, const std::vector<FloorConstraint>& cs) {
  for (const auto& c : cs)
    if (mode_sum(k, c.legs) < c.floor) return false;
  return true;
}

std::vector<FloorConstraint> leg_floors(int legs, int floor) {
  std::vector<FloorConstraint> cs;
  for (int i = 0; i < legs; ++i) cs.push_back({leg_bit(i), floor});
  return cs;
}

TensorElement TensorElement::unit(int legs) {
  TensorElement t(legs);
  t.terms_.emplace(Key(legs), Scalar(1));
  return t;
}

TensorElement TensorElement::pure(const std::vector<AlgebraElement>& factors) {
  TensorElement t(static_cast<int>(factors.size()));
  std::vector<const AlgebraElement*> ptrs;
  for (const auto& f : factors) ptrs.push_back(&f);
  t.add_product(ptrs, Scalar(1));
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i].truncated()) t.impose({leg_bit(static_cast<int>(i)), factors[i].floor()});
  return t;
}

TensorElement TensorElement::from_key(const Key& k, const Scalar& c) {
  TensorElement t(static_cast<int>(k.size()));
  t.add_term(k, c);
  return t;
}

Scalar TensorElement::coefficient(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int TensorElement::leg_floor(int leg) const {
  for (const auto& c : constraints_)
    if (c.legs == leg_bit(leg)) return c.floor;
  return kNoFloor;
}

void TensorElement::impose(FloorConstraint c) {
  merge_constraint(constraints_, c);
  for (auto it = terms_.begin(); it != terms_.end();)
    it = satisfies(it->first, constraints_) ? std::next(it) : terms_.erase(it);
}

bool TensorElement::reliable(const Key& k) const { return satisfies(k, constraints_); }

int TensorElement::max_mode(unsigned legs) const {
  int m = kNoFloor;
  for (const auto& [k, c] : terms_) m = std::max(m, mode_sum(k, legs));
  return m;
}

void TensorElement::add_term(const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(k.size()) != legs_)
    throw Error(ErrorCode::leg_mismatch, "term with wrong number of legs");
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorElement::add_product(const std::vector<const AlgebraElement*>& factors, const Scalar& c) {
  if (static_cast<int>(factors.size()) != legs_)
    throw Error(ErrorCode::leg_mismatch, "factor count differs from leg count");
  Key key(legs_);
  auto rec = [&](auto&& self, int i, const Scalar& acc) -> void {
    if (i == legs_) {
      if (satisfies(key, constraints_)) add_term(key, acc);
      return;
    }
    for (const auto& [w, wc] : factors[i]->terms()) {
      key[i] = w;
      self(self, i + 1, acc * wc);
    }
  };
  rec(rec, 0, c);
}

TensorElement TensorElement::operator-() const {
  TensorElement t = *this;
  for (auto& [k, c] : t.terms_) c = -c;
  return t;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (o.legs_ != legs_) throw Error(ErrorCode::leg_mismatch, "adding tensors with different legs");
  for (const auto& c : o.constraints_) merge_constraint(constraints_, c);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  for (auto it = terms_.begin(); it != terms_.end();)
    it = satisfies(it->first, constraints_) ? std::next(it) : terms_.erase(it);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) { return *this += -o; }

TensorElement& TensorElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, x] : terms_) x *= c;
  return *this;
}

TensorElement::Terms TensorElement::reliable_terms(const std::vector<FloorConstraint>& extra) const {
  Terms t;
  for (const auto& [k, c] : terms_)
    if (satisfies(k, constraints_) && satisfies(k, extra)) t.emplace(k, c);
  return t;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  if (a.legs_ != b.legs_) return false;
  std::vector<FloorConstraint> all = a.constraints_;
  for (const auto& c : b.constraints_) merge_constraint(all, c);
  return a.reliable_terms(all) == b.reliable_terms(all);
}

std::string TensorElement::to_string(std::size_t max_terms) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  std::size_t n = 0;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it, ++n) {
    if (max_terms && n == max_terms) {
      os << " + ... (" << terms_.size() - n << " more)";
      break;
    }
    const auto& [k, c] = *it;
    if (n == 0) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (!c.abs().is_one()) os << c.abs() << "*";
    os << "(";
    for (std::size_t i = 0; i < k.size(); ++i) os << (i ? " ⊗ " : "") << yangian::to_string(k[i]);
    os << ")";
  }
  return os.str();
}

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b,
                              const std::vector<FloorConstraint>& floors) {
  if (a.legs() != b.legs()) throw Error(ErrorCode::leg_mismatch, "tensor legs differ");
  const int legs = a.legs();
  std::vector<FloorConstraint> cs;
  for (const auto& c : floors) merge_constraint(cs, c);
  for (const auto& c : a.constraints()) merge_constraint(cs, {c.legs, clamp(long(c.floor) + b.max_mode(c.legs))});
  for (const auto& c : b.constraints()) merge_constraint(cs, {c.legs, clamp(long(c.floor) + a.max_mode(c.legs))});

  std::vector<int> max_a(legs), max_b(legs), lf(legs, kNoFloor);
  for (int i = 0; i < legs; ++i) {
    max_a[i] = a.max_mode(leg_bit(i));
    max_b[i] = b.max_mode(leg_bit(i));
  }
  for (const auto& c : cs)
    for (int i = 0; i < legs; ++i) {
      if (!(c.legs & leg_bit(i))) continue;
      long bound = c.floor;
      for (int j = 0; j < legs; ++j)
        if (j != i && (c.legs & leg_bit(j))) bound -= long(max_a[j]) + max_b[j];
      lf[i] = std::max(lf[i], clamp(bound));
    }

  TensorElement r(legs);
  for (const auto& c : cs) r.impose(c);
  std::vector<std::map<std::pair<Word, Word>, AlgebraElement>> cache(legs);
  std::vector<const AlgebraElement*> parts(legs);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      bool hopeless = false;
      for (const auto& c : cs) {
        long upper = 0;
        for (int i = 0; i < legs; ++i)
          if (c.legs & leg_bit(i)) upper += mode_sum(ka[i]) + mode_sum(kb[i]);
        if (upper < c.floor) {
          hopeless = true;
          break;
        }
      }
      if (hopeless) continue;
      int sign = 1;
      for (int i = 0; i < legs; ++i)
        for (int j = i + 1; j < legs; ++j) sign *= sign_of(parity(ka[j]), parity(kb[i]));
      bool zero = false;
      for (int i = 0; i < legs && !zero; ++i) {
        auto key = std::make_pair(ka[i], kb[i]);
        auto it = cache[i].find(key);
        if (it == cache[i].end()) {
          AlgebraElement p;
          if (ka[i].empty()) {
            p = AlgebraElement::from_word(kb[i]);
          } else if (kb[i].empty()) {
            p = AlgebraElement::from_word(ka[i]);
          } else {
            p = multiply(AlgebraElement::from_word(ka[i]), AlgebraElement::from_word(kb[i]), lf[i]);
          }
          it = cache[i].emplace(std::move(key), std::move(p)).first;
        }
        parts[i] = &it->second;
        zero = it->second.is_zero();
      }
      if (zero) continue;
      r.add_product(parts, ca * cb * Scalar(sign));
    }
  return r;
}

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b, int leg_floor) {
  return tensor_multiply(a, b, leg_floors(a.legs(), leg_floor));
}

}  // namespace yangian
