#pragma once

#include <map>
#include <vector>

#include "fpltri/combinat.hpp"
#include "fpltri/matrix.hpp"
#include "fpltri/mpoly.hpp"
#include "fpltri/polyring.hpp"

namespace fpltri {

// Schur polynomial s_lambda(u_0..u_{nvars-1}) as a sum over semistandard
// tableaux, truncated by caps. Results are cached per (lambda, nvars, caps).
const MPoly<Int>& schur_poly(const std::vector<int>& lambda, int nvars, const Caps& caps);

template <class R>
MPoly<R> convert_poly(const MPoly<Int>& p) {
  MPoly<R> r(p.nvars());
  for (const auto& [m, c] : p.terms()) r.add_term(m, R(c));
  return r;
}

template <class R>
MPoly<R> schur(const Diagram& d, const Caps& caps) {
  return convert_poly<R>(schur_poly(d.partition(), d.n(), caps));
}

// Deformed Schur function: with v_i = u_i / (1 + t u_i),
//   st_sigma(u) = prod_i (1 + t u_i)^{n-1} * det(v_i^{a_j}) / Delta(u)
// where a is the transpose diagram of sigma. Each alternant column is
// expanded through (u/(1+tu))^a = sum_k (-t)^k C(a+k-1,k) u^{a+k} and the
// resulting alternants are sorted back into Schur terms.
template <class R>
MPoly<R> tilde_schur(const Diagram& sigma, const R& t, const Caps& caps) {
  int n = sigma.n();
  std::vector<int> a = sigma.transpose().seq();
  int maxent = 0;
  for (int i = 0; i < n; ++i) maxent = std::max(maxent, caps.var[i]);
  int base = n * (n - 1) / 2;
  int total_bound = caps.total < 0 ? n * maxent : caps.total + base;

  MPoly<R> sum(n);
  std::vector<int> b(n);
  auto rec = [&](auto&& self, int j, int partial, const R& coef) -> void {
    if (partial > total_bound) return;
    if (j == n) {
      // Sort b into a strictly increasing sequence, tracking the sign.
      std::vector<int> s = b;
      int sign = 1;
      for (size_t x = 1; x < s.size(); ++x)
        for (size_t y = x; y > 0 && s[y - 1] >= s[y]; --y) {
          if (s[y - 1] == s[y]) return;
          std::swap(s[y - 1], s[y]);
          sign = -sign;
        }
      std::vector<int> lambda(n);
      for (int i = 0; i < n; ++i) lambda[n - 1 - i] = s[i] - i;
      if (lambda[0] > 0 && lambda[0] > caps.total && caps.total >= 0) return;
      MPoly<R> term = convert_poly<R>(schur_poly(lambda, n, caps));
      term.scale(sign > 0 ? coef : R(0) - coef);
      sum += term;
      return;
    }
    for (int k = 0; a[j] + k <= maxent; ++k) {
      if (a[j] == 0 && k > 0) break;  // C(k-1,k) = 0
      b[j] = a[j] + k;
      R c = coef * R(binom(a[j] + k - 1, k));
      if (k % 2) c = R(0) - c;
      for (int rep = 0; rep < k; ++rep) c *= t;
      self(self, j + 1, partial + b[j], c);
    }
  };
  rec(rec, 0, 0, R(1));

  MPoly<R> pref = one_plus_scaled_u_power<R>(n, t, n - 1, caps);
  return mul(sum, pref, caps);
}

// Littlewood-Richardson coefficient c^rho_{sigma,tau}, read off as the
// coefficient of u^{rho seq} in s_sigma * alternant(tau seq).
Int lr_coefficient(const Diagram& sigma, const Diagram& tau, const Diagram& rho);

// Content-hook product: prod over boxes (i,j) of (j - i + x) / hook(i,j).
Rat hook_content(const Diagram& sigma, const Rat& x);

// Coefficients of p in the Schur basis, read via alternants: multiply by the
// Vandermonde and extract the coefficients at the given exponent sequences.
template <class R>
std::vector<R> alternant_coefficients(const MPoly<R>& p, const std::vector<std::vector<int>>& seqs,
                                      const Caps& caps) {
  MPoly<R> q = mul(p, vandermonde<R>(p.nvars(), caps), caps);
  std::vector<R> out;
  out.reserve(seqs.size());
  for (const auto& s : seqs) out.push_back(q.coefficient(mono_of(s)));
  return out;
}

template <class R>
std::vector<R> schur_expand(const MPoly<R>& p, const std::vector<Diagram>& basis) {
  std::vector<std::vector<int>> seqs;
  seqs.reserve(basis.size());
  for (const auto& d : basis) seqs.push_back(d.seq());
  int n = p.nvars();
  return alternant_coefficients(p, seqs, Caps::staircase(n));
}

// Matrix of the involution on the staircase span: column lambda holds the
// Schur expansion of st_lambda.
template <class R>
Mat<R> involution_matrix(int n, const R& t, const std::vector<Diagram>& basis) {
  Mat<R> phi(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
  Caps caps = Caps::staircase(n);
  for (size_t j = 0; j < basis.size(); ++j) {
    auto col = schur_expand(tilde_schur(basis[j], t, caps), basis);
    for (size_t i = 0; i < basis.size(); ++i) phi(static_cast<int>(i), static_cast<int>(j)) = col[i];
  }
  return phi;
}

}  // namespace fpltri
