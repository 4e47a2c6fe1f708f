#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fpltri/numbers.hpp"

namespace fpltri {

// Monomial in u_0..u_{n-1}, n <= 8, packed 8 bits per exponent with u_0 in
// the high byte so raw comparison orders lexicographically by u_0, u_1, ...
using Mono = std::uint64_t;
inline constexpr int kMaxVars = 8;

inline int mono_exp(Mono m, int i) {
  return static_cast<int>((m >> (8 * (kMaxVars - 1 - i))) & 0xff);
}

inline Mono mono_unit(int i, int e) {
  return static_cast<Mono>(static_cast<std::uint64_t>(e) << (8 * (kMaxVars - 1 - i)));
}

inline Mono mono_of(const std::vector<int>& exps) {
  if (exps.size() > kMaxVars) throw std::invalid_argument("too many variables");
  Mono m = 0;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 255) throw std::invalid_argument("exponent out of range");
    m |= mono_unit(static_cast<int>(i), exps[i]);
  }
  return m;
}

inline std::vector<int> mono_exps(Mono m, int nvars) {
  std::vector<int> e(nvars);
  for (int i = 0; i < nvars; ++i) e[i] = mono_exp(m, i);
  return e;
}

inline int mono_total(Mono m) {
  int s = 0;
  for (int i = 0; i < kMaxVars; ++i) s += static_cast<int>((m >> (8 * i)) & 0xff);
  return s;
}

// Truncation bounds: inclusive bound per variable, optional inclusive bound
// on total degree. Exponents of u_i with i >= nvars are forced to zero by
// the per-variable defaults.
struct Caps {
  std::array<int, kMaxVars> var{};
  int total = -1;

  // The working caps for size-n computations: exponent of u_i at most 2i.
  static Caps staircase(int n) {
    Caps c;
    for (int i = 0; i < n; ++i) c.var[i] = 2 * i;
    c.total = n * (n - 1);
    return c;
  }

  static Caps uniform(int n, int bound, int total_bound = -1) {
    Caps c;
    for (int i = 0; i < n; ++i) c.var[i] = bound;
    c.total = total_bound;
    return c;
  }

  bool ok(Mono m) const {
    int s = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      int e = mono_exp(m, i);
      if (e > var[i]) return false;
      s += e;
    }
    return total < 0 || s <= total;
  }
};

template <class R>
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(int nvars) : n_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("bad variable count");
  }

  static MPoly constant(int nvars, R c) {
    MPoly p(nvars);
    p.add_term(0, std::move(c));
    return p;
  }

  static MPoly monomial(int nvars, Mono m, R c) {
    MPoly p(nvars);
    p.add_term(m, std::move(c));
    return p;
  }

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::unordered_map<Mono, R>& terms() const { return terms_; }

  void add_term(Mono m, R c) {
    if (is_zero_scalar(c)) return;
    auto [it, fresh] = terms_.try_emplace(m, std::move(c));
    if (!fresh) {
      it->second += c;
      if (is_zero_scalar(it->second)) terms_.erase(it);
    }
  }

  R coefficient(Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? R(0) : it->second;
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  MPoly& operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, R(0) - c);
    return *this;
  }

  void scale(const R& c) {
    if (is_zero_scalar(c)) {
      terms_.clear();
      return;
    }
    for (auto& [m, v] : terms_) v *= c;
  }

  // Deterministic term order for printing and hashing.
  std::vector<std::pair<Mono, R>> sorted_terms() const {
    std::vector<std::pair<Mono, R>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [m, c] : a.terms_) {
      auto it = b.terms_.find(m);
      if (it == b.terms_.end() || !(it->second == c)) return false;
    }
    return true;
  }

 private:
  static bool is_zero_scalar(const R& v) { return fpltri::is_zero(v); }

  int n_ = 0;
  std::unordered_map<Mono, R> terms_;
};

// Product truncated by caps. Packed-byte addition of monomials cannot carry
// across byte lanes because capped exponents stay far below 128.
template <class R>
MPoly<R> mul(const MPoly<R>& a, const MPoly<R>& b, const Caps& caps) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
  MPoly<R> r(a.nvars());
  const MPoly<R>& outer = a.term_count() <= b.term_count() ? a : b;
  const MPoly<R>& inner = a.term_count() <= b.term_count() ? b : a;
  for (const auto& [ma, ca] : outer.terms()) {
    for (const auto& [mb, cb] : inner.terms()) {
      Mono m = ma + mb;
      if (!caps.ok(m)) continue;
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

}  // namespace fpltri
