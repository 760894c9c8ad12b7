#include "yangian/superalg/algebra.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <tuple>

#include "yangian/error.hpp"

namespace yangian {

char class_letter(GenClass c) {
  switch (c) {
    case GenClass::E: return 'e';
    case GenClass::F: return 'f';
    case GenClass::H: return 'h';
    case GenClass::K: return 'k';
  }
  return '?';
}

Parity parity(const Word& w) {
  Parity p = Parity::even;
  for (const auto& g : w) p = p + g.parity();
  return p;
}

int mode_sum(const Word& w) {
  int s = 0;
  for (const auto& g : w) s += g.mode;
  return s;
}

bool is_normal_form(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    const auto& a = w[i - 1];
    const auto& b = w[i];
    if (a.cls > b.cls) return false;
    if (a.cls != b.cls) continue;
    if (a.parity() == Parity::odd ? a.mode >= b.mode : a.mode > b.mode) return false;
  }
  return true;
}

std::string to_string(const Generator& g) {
  return std::string(1, class_letter(g.cls)) + "[" + std::to_string(g.mode) + "]";
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += to_string(w[i]);
  }
  return s;
}

// ---------------------------------------------------------------- element

AlgebraElement::AlgebraElement(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Word{}, c);
}

AlgebraElement::AlgebraElement(Generator g) { terms_.emplace(Word{g}, Scalar(1)); }

AlgebraElement AlgebraElement::from_word(const Word& w, const Scalar& c) {
  AlgebraElement a;
  if (!c.is_zero()) a.terms_.emplace(w, c);
  return a;
}

Scalar AlgebraElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void AlgebraElement::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void AlgebraElement::truncate(int floor) {
  if (floor <= floor_ && truncated_) return;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (mode_sum(it->first) < floor) {
      it = terms_.erase(it);
      truncated_ = true;
    } else {
      ++it;
    }
  }
  floor_ = std::max(floor_, floor);
}

void AlgebraElement::set_floor(int floor, bool truncated) {
  floor_ = floor;
  truncated_ = truncated;
  if (truncated) {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = mode_sum(it->first) < floor ? terms_.erase(it) : std::next(it);
  }
}

int AlgebraElement::max_mode() const {
  int m = kNoFloor;
  for (const auto& [w, c] : terms_) m = std::max(m, mode_sum(w));
  return m;
}

int AlgebraElement::min_mode() const {
  int m = -kNoFloor;
  for (const auto& [w, c] : terms_) m = std::min(m, mode_sum(w));
  return m;
}

bool AlgebraElement::has_definite_parity() const {
  if (terms_.empty()) return true;
  const Parity p = yangian::parity(terms_.begin()->first);
  for (const auto& [w, c] : terms_)
    if (yangian::parity(w) != p) return false;
  return true;
}

Parity AlgebraElement::parity() const {
  if (!has_definite_parity())
    throw Error(ErrorCode::indefinite_parity, "element mixes even and odd words: " + to_string());
  return terms_.empty() ? Parity::even : yangian::parity(terms_.begin()->first);
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

namespace {

int exact_floor(const AlgebraElement& a) { return a.truncated() ? a.floor() : kNoFloor; }

}  // namespace

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  const bool t = truncated_ || o.truncated_;
  const int fl = std::max(exact_floor(*this), exact_floor(o));
  if (t) {
    set_floor(fl, true);
  } else {
    floor_ = std::max(floor_, o.floor_);
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) { return *this += -o; }

AlgebraElement& AlgebraElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, k] : terms_) k *= c;
  return *this;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  const int fl = std::max(exact_floor(a), exact_floor(b));
  auto visible = [fl](const AlgebraElement& x) {
    AlgebraElement::Terms t;
    for (const auto& [w, c] : x.terms())
      if (mode_sum(w) >= fl) t.emplace(w, c);
    return t;
  };
  return visible(a) == visible(b);
}

AlgebraElement AlgebraElement::restricted(int floor) const {
  AlgebraElement r = *this;
  r.truncate(floor);
  return r;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    Scalar a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (w.empty()) {
      os << a;
    } else {
      if (!a.is_one()) os << a << "*";
      os << yangian::to_string(w);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- kappa

namespace {

struct KappaKey {
  GenClass cls;
  int m, n, floor;
  friend auto operator<=>(const KappaKey&, const KappaKey&) = default;
};

std::mutex kappa_mutex;
std::map<KappaKey, AlgebraElement> kappa_cache;
thread_local int kappa_depth = 0;
thread_local int kappa_depth_max = 0;

struct DepthGuard {
  DepthGuard() { kappa_depth_max = std::max(kappa_depth_max, ++kappa_depth); }
  ~DepthGuard() { --kappa_depth; }
};

AlgebraElement word2(Generator a, Generator b, const Scalar& c) {
  return AlgebraElement::from_word(Word{a, b}, c);
}

AlgebraElement kappa(GenClass cls, int m, int n, int floor);

AlgebraElement kappa_uncached(GenClass cls, int m, int n, int floor) {
  const int s = cls == GenClass::E ? -1 : 1;
  const Generator x{cls, n};
  if (m == 0) return AlgebraElement::from_word(Word{x}, Scalar(2 * s));
  if (m > 0) {
    // k(m,n) = k(m-1,n+1) + s k(m-1,n) + 2s x_n h_{m-1}
    AlgebraElement r = kappa(cls, m - 1, n + 1, kNoFloor);
    r += kappa(cls, m - 1, n, kNoFloor) * Scalar(s);
    r += word2(x, h(m - 1), Scalar(2 * s));
    return r;
  }
  // k(m,n) = k(m+1,n-1) - s k(m,n-1) - 2s x_{n-1} h_m, descending in mode sum.
  AlgebraElement r;
  if (m + n < floor) {
    r.set_floor(floor, true);
    return r;
  }
  r = kappa(cls, m + 1, n - 1, floor);
  r.truncate(floor);
  r += kappa(cls, m, n - 1, floor) * Scalar(-s);
  AlgebraElement tail = word2(Generator{cls, n - 1}, h(m), Scalar(-2 * s));
  tail.truncate(floor);
  r += tail;
  if (!r.truncated()) r.set_floor(floor, false);
  return r;
}

AlgebraElement kappa(GenClass cls, int m, int n, int floor) {
  if (m >= 0) floor = kNoFloor;
  else if (floor <= kNoFloor / 2)
    throw Error(ErrorCode::floor_too_shallow,
                "rewriting h[" + std::to_string(m) + "] past a fermion needs a finite floor");
  const KappaKey key{cls, m, n, floor};
  {
    std::lock_guard<std::mutex> lock(kappa_mutex);
    auto it = kappa_cache.find(key);
    if (it != kappa_cache.end()) return it->second;
  }
  DepthGuard guard;
  AlgebraElement r = kappa_uncached(cls, m, n, floor);
  std::lock_guard<std::mutex> lock(kappa_mutex);
  kappa_cache.emplace(key, r);
  return r;
}

// ---------------------------------------------------------------- rewriting

using Acc = std::map<Word, Scalar>;

void accumulate(Acc& acc, Word&& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

struct Blocks {
  Word F, E, H, K;
};

Blocks split(const Word& w) {
  Blocks b;
  for (const auto& g : w) {
    switch (g.cls) {
      case GenClass::F: b.F.push_back(g); break;
      case GenClass::E: b.E.push_back(g); break;
      case GenClass::H: b.H.push_back(g); break;
      case GenClass::K: b.K.push_back(g); break;
    }
  }
  return b;
}

Word join(const Word& F, const Word& E, const Word& H, const Word& K) {
  Word w;
  w.reserve(F.size() + E.size() + H.size() + K.size());
  w.insert(w.end(), F.begin(), F.end());
  w.insert(w.end(), E.begin(), E.end());
  w.insert(w.end(), H.begin(), H.end());
  w.insert(w.end(), K.begin(), K.end());
  return w;
}

void insert_sorted(Word& block, Generator g) {
  block.insert(std::upper_bound(block.begin(), block.end(), g), g);
}

/// Appends a fermion to the right end of a strictly increasing block and
/// sorts it into place. Returns the sign, or 0 when the letter repeats.
int insert_fermion(Word& block, Generator g) {
  auto pos = std::lower_bound(block.begin(), block.end(), g);
  if (pos != block.end() && pos->mode == g.mode) return 0;
  const long passed = block.end() - pos;
  block.insert(pos, g);
  return passed % 2 ? -1 : 1;
}

/// (mode of the x letter, sorted H word) -> coefficient.
using XH = std::map<std::pair<int, Word>, Scalar>;

/// H * x_n = sum c x_a H'' with a + mode(H'') >= rel_floor.
XH pass_through_h(GenClass cls, const Word& H, int n, int rel_floor, bool& truncated) {
  XH out;
  if (n + mode_sum(H) < rel_floor) {
    truncated = true;
    return out;
  }
  if (H.empty()) {
    out.emplace(std::make_pair(n, Word{}), Scalar(1));
    return out;
  }
  const Generator last = H.back();
  const Word rest(H.begin(), H.end() - 1);
  const int rest_mode = mode_sum(rest);
  auto add = [&out](int a, Word w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = out.try_emplace(std::make_pair(a, std::move(w)), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (auto& [key, c] : pass_through_h(cls, rest, n, rel_floor - last.mode, truncated)) {
    Word w = key.second;
    insert_sorted(w, last);
    add(key.first, std::move(w), c);
  }
  AlgebraElement corr = kappa(cls, last.mode, n, rel_floor - rest_mode);
  if (corr.truncated()) truncated = true;
  for (const auto& [kw, kc] : corr.terms()) {
    const int a = kw[0].mode;
    const bool has_h = kw.size() > 1;
    const int b = has_h ? kw[1].mode : 0;
    for (auto& [key, c] : pass_through_h(cls, rest, a, rel_floor - b, truncated)) {
      Word w = key.second;
      if (has_h) insert_sorted(w, h(b));
      add(key.first, std::move(w), c * kc);
    }
  }
  return out;
}

/// Normal-ordered w * g accumulated into out; words below floor dropped.
void append_generator(const Word& w, const Scalar& c, Generator g, int floor, Acc& out,
                      bool& truncated) {
  if (mode_sum(w) + g.mode < floor) {
    truncated = true;
    return;
  }
  Blocks b = split(w);
  switch (g.cls) {
    case GenClass::K: {
      insert_sorted(b.K, g);
      accumulate(out, join(b.F, b.E, b.H, b.K), c);
      return;
    }
    case GenClass::H: {
      insert_sorted(b.H, g);
      accumulate(out, join(b.F, b.E, b.H, b.K), c);
      return;
    }
    case GenClass::E: {
      const int outer = mode_sum(b.F) + mode_sum(b.E) + mode_sum(b.K);
      for (auto& [key, kc] : pass_through_h(GenClass::E, b.H, g.mode, floor - outer, truncated)) {
        Word E = b.E;
        int s = insert_fermion(E, e(key.first));
        if (s == 0) continue;
        Word hw = key.second;
        if (mode_sum(b.F) + mode_sum(E) + mode_sum(hw) + mode_sum(b.K) < floor) {
          truncated = true;
          continue;
        }
        accumulate(out, join(b.F, E, hw, b.K), c * kc * Scalar(s));
      }
      return;
    }
    case GenClass::F: {
      const int outer = mode_sum(b.F) + mode_sum(b.E) + mode_sum(b.K);
      for (auto& [key, kc] : pass_through_h(GenClass::F, b.H, g.mode, floor - outer, truncated)) {
        const int a = key.first;
        const Word& hw = key.second;
        const Scalar base = c * kc;
        if (outer + a + mode_sum(hw) < floor) {
          truncated = true;
          continue;
        }
        // E * f_a = (-1)^r f_a E - sum_j (-1)^{r-j} E_{without j} k_{m_j + a}
        const long r = static_cast<long>(b.E.size());
        {
          Word F = b.F;
          int s = insert_fermion(F, f(a));
          if (s != 0) {
            if (r % 2) s = -s;
            accumulate(out, join(F, b.E, hw, b.K), base * Scalar(s));
          }
        }
        for (long j = 0; j < r; ++j) {
          Word E = b.E;
          const int mj = E[j].mode;
          E.erase(E.begin() + j);
          Word K = b.K;
          insert_sorted(K, k(mj + a));
          const long sgn = ((r - 1 - j) % 2) ? 1 : -1;
          accumulate(out, join(b.F, E, hw, K), base * Scalar(sgn));
        }
      }
      return;
    }
  }
}

/// Normal-ordered (c * w) * letters, keeping mode sums >= floor.
void multiply_word(const Word& w, const Scalar& c, const Word& letters, int floor, Acc& out,
                   bool& truncated) {
  Acc cur;
  cur.emplace(w, c);
  int remaining = mode_sum(letters);
  for (const auto& g : letters) {
    remaining -= g.mode;
    Acc next;
    for (const auto& [cw, cc] : cur) append_generator(cw, cc, g, floor - remaining, next, truncated);
    cur = std::move(next);
    if (cur.empty()) return;
  }
  for (auto& [cw, cc] : cur) accumulate(out, Word(cw), cc);
}

int clamp_add(int a, int b) {
  long s = static_cast<long>(a) + b;
  return static_cast<int>(std::max<long>(s, kNoFloor));
}

}  // namespace

AlgebraElement h_current_bracket(GenClass target, int m, int n, int floor) {
  if (target != GenClass::E && target != GenClass::F)
    throw Error(ErrorCode::config_invalid, "h_current_bracket targets E or F");
  AlgebraElement r = kappa(target, m, n, floor);
  r.truncate(floor);
  if (!r.truncated()) r.set_floor(floor, false);
  return r;
}

AlgebraElement normal_order(const AlgebraElement& x, int floor) {
  const int fl = std::max(floor, exact_floor(x));
  Acc out;
  bool truncated = x.truncated();
  for (const auto& [w, c] : x.terms()) multiply_word(Word{}, c, w, fl, out, truncated);
  AlgebraElement r;
  for (auto& [w, c] : out) r.add_term(w, c);
  r.set_floor(fl, truncated);
  return r;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b, int floor) {
  int fl = floor;
  if (a.truncated()) fl = std::max(fl, clamp_add(a.floor(), b.max_mode()));
  if (b.truncated()) fl = std::max(fl, clamp_add(b.floor(), a.max_mode()));
  bool truncated = a.truncated() || b.truncated();
  Acc out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      if (mode_sum(wa) + mode_sum(wb) < fl) {
        truncated = true;
        continue;
      }
      multiply_word(wa, ca * cb, wb, fl, out, truncated);
    }
  AlgebraElement r;
  for (auto& [w, c] : out) r.add_term(w, c);
  r.set_floor(fl, truncated);
  return r;
}

AlgebraElement super_bracket(const AlgebraElement& a, const AlgebraElement& b, int floor) {
  const int s = sign_of(a.parity(), b.parity());
  return multiply(a, b, floor) - multiply(b, a, floor) * Scalar(s);
}

int kappa_max_depth() { return kappa_depth_max; }

void kappa_reset_stats() {
  kappa_depth_max = 0;
  std::lock_guard<std::mutex> lock(kappa_mutex);
  kappa_cache.clear();
}

}  // namespace yangian
