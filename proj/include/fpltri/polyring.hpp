#pragma once

#include <numeric>
#include <vector>

#include "fpltri/mpoly.hpp"
#include "fpltri/numbers.hpp"

namespace fpltri {

// prod_{i<j} (u_j - u_i)
template <class R>
MPoly<R> vandermonde(int n, const Caps& caps) {
  MPoly<R> p = MPoly<R>::constant(n, R(1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      MPoly<R> f(n);
      f.add_term(mono_unit(j, 1), R(1));
      f.add_term(mono_unit(i, 1), R(-1));
      p = mul(p, f, caps);
    }
  return p;
}

// prod_{i<j} (1 + t u_j + u_i u_j)
template <class R>
MPoly<R> loop_weight(int n, const R& t, const Caps& caps) {
  MPoly<R> p = MPoly<R>::constant(n, R(1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      MPoly<R> f(n);
      f.add_term(0, R(1));
      f.add_term(mono_unit(j, 1), t);
      f.add_term(mono_unit(i, 1) + mono_unit(j, 1), R(1));
      p = mul(p, f, caps);
    }
  return p;
}

// prod_i (1 + s u_i)^k, each factor expanded binomially under the caps
template <class R>
MPoly<R> one_plus_scaled_u_power(int n, const R& s, int k, const Caps& caps) {
  MPoly<R> p = MPoly<R>::constant(n, R(1));
  for (int i = 0; i < n; ++i) {
    MPoly<R> f(n);
    R spow(1);
    for (int j = 0; j <= std::min(k, caps.var[i]); ++j) {
      f.add_term(mono_unit(i, j), R(binom(k, j)) * spow);
      spow *= s;
    }
    p = mul(p, f, caps);
  }
  return p;
}

template <class R>
MPoly<R> one_plus_u_power(int n, int k, const Caps& caps) {
  return one_plus_scaled_u_power(n, R(1), k, caps);
}

template <class R>
MPoly<R> permute_vars(const MPoly<R>& p, const std::vector<int>& perm) {
  MPoly<R> r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Mono q = 0;
    for (size_t i = 0; i < perm.size(); ++i) q |= mono_unit(perm[i], mono_exp(m, static_cast<int>(i)));
    r.add_term(q, c);
  }
  return r;
}

// (1/n!) sum_w sign(w) w(p), over Rat because of the 1/n! factor
MPoly<Rat> antisymmetrize(const MPoly<Rat>& p);

// Invariance under the adjacent transpositions, which generate S_n. Cheap
// full symmetry check.
template <class R>
bool is_symmetric(const MPoly<R>& p) {
  int n = p.nvars();
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[i], perm[i + 1]);
    if (!(permute_vars(p, perm) == p)) return false;
  }
  return true;
}

}  // namespace fpltri
