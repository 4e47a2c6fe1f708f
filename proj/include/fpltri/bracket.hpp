#pragma once

#include <map>
#include <vector>

#include "fpltri/combinat.hpp"
#include "fpltri/matrix.hpp"
#include "fpltri/mpoly.hpp"
#include "fpltri/polyring.hpp"
#include "fpltri/symfun.hpp"

namespace fpltri {

// The pairing <F>_alpha: coefficient of u^alpha in F * Delta * W where W is
// the loop weight kernel. Everything is truncated to exponents alpha_i <= 2i,
// which is sound because exponents only grow in products and every target
// stays inside the staircase.
template <class R>
class BracketContext {
 public:
  BracketContext(int n, const R& t) : BracketContext(n, t, Caps::staircase(n)) {}

  // Custom caps, for extraction targets outside the staircase window.
  BracketContext(int n, const R& t, const Caps& caps)
      : n_(n),
        t_(t),
        caps_(caps),
        basis_(enumerate_basis(n)),
        kernel_(mul(vandermonde<R>(n, caps_), loop_weight<R>(n, t, caps_), caps_)) {}

  int n() const { return n_; }
  const R& t() const { return t_; }
  const Caps& caps() const { return caps_; }
  const std::vector<Diagram>& basis() const { return basis_; }
  const MPoly<R>& kernel() const { return kernel_; }

  const MPoly<R>& tilde(const Diagram& sigma) {
    auto it = tilde_.find(sigma);
    if (it == tilde_.end())
      it = tilde_.emplace(sigma, tilde_schur(sigma, t_, caps_)).first;
    return it->second;
  }

  // (s_tau * prod (1+u_i)^{n-1+2m}) * kernel. Coefficients of this give
  // every bracket against s_tau in one lookup.
  const MPoly<R>& ket(const Diagram& tau, int m = 0) {
    auto key = std::make_pair(tau, m);
    auto it = ket_.find(key);
    if (it == ket_.end()) {
      MPoly<R> f = mul(schur<R>(tau, caps_), one_plus_u_power<R>(n_, n_ - 1 + 2 * m, caps_), caps_);
    it = ket_.emplace(std::move(key), mul(f, kernel_, caps_)).first;
    }
    return it->second;
  }

  R bracket(const MPoly<R>& f, const std::vector<int>& alpha) {
    return mul(f, kernel_, caps_).coefficient(mono_of(alpha));
  }

  // Psi_alpha = <1>_alpha over the whole basis.
  std::vector<R> psi_vector() {
    std::vector<R> v;
    v.reserve(basis_.size());
    for (const auto& d : basis_) v.push_back(kernel_.coefficient(mono_of(d.seq())));
    return v;
  }

  // Psi at the m-fold embedded sequence: Psi_{(alpha)_m} = <prod (1+u_i)^m>_alpha.
  std::vector<R> psi_shifted(int m) {
    MPoly<R> p = mul(one_plus_u_power<R>(n_, m, caps_), kernel_, caps_);
    std::vector<R> v;
    v.reserve(basis_.size());
    for (const auto& d : basis_) v.push_back(p.coefficient(mono_of(d.seq())));
    return v;
  }

  // A_{sigma,alpha,tau} = <st_sigma s_tau prod (1+u_i)^{n-1}>_alpha.
  R compute_A(const Diagram& sigma, const Diagram& alpha, const Diagram& tau) {
    return mul(tilde(sigma), ket(tau), caps_).coefficient(mono_of(alpha.seq()));
  }

  // A at a general exponent sequence, tilde side left empty:
  // A^ext_{tau,gamma} = <s_tau prod (1+u_i)^{n-1}>_gamma.
  R compute_A_ext(const Diagram& tau, const std::vector<int>& gamma) {
    for (int g : gamma)
      if (g < 0) return R(0);
    return ket(tau).coefficient(mono_of(gamma));
  }

  // A at the m-fold embedded sequence (alpha)_m, computed at size n:
  // A_{sigma,(alpha)_m,tau} = <st_sigma s_tau prod (1+u_i)^{n-1+2m}>_alpha.
  R compute_A_shifted(const Diagram& sigma, const Diagram& tau, int m,
                      const std::vector<int>& alpha) {
    return mul(tilde(sigma), ket(tau, m), caps_).coefficient(mono_of(alpha));
  }

  // A(sigma) with rows tau and columns alpha, both in basis order.
  Mat<R> a_matrix(const Diagram& sigma) {
    int sz = static_cast<int>(basis_.size());
    Mat<R> m(sz, sz);
    for (int i = 0; i < sz; ++i) {
      MPoly<R> p = mul(tilde(sigma), ket(basis_[i]), caps_);
      for (int j = 0; j < sz; ++j) m(i, j) = p.coefficient(mono_of(basis_[j].seq()));
    }
    return m;
  }

  // A-bar(alpha) with rows sigma and columns tau, both in basis order.
  Mat<R> a_bar_matrix(const Diagram& alpha) {
    int sz = static_cast<int>(basis_.size());
    Mat<R> m(sz, sz);
    Mono target = mono_of(alpha.seq());
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j)
        m(i, j) = mul(tilde(basis_[i]), ket(basis_[j]), caps_).coefficient(target);
    return m;
  }

  // The full tensor indexed [sigma][tau][alpha], sharing one product per
  // (sigma, tau) pair.
  std::vector<std::vector<std::vector<R>>> a_tensor() {
    int sz = static_cast<int>(basis_.size());
    std::vector<std::vector<std::vector<R>>> t(
        sz, std::vector<std::vector<R>>(sz, std::vector<R>(sz, R(0))));
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j) {
        MPoly<R> p = mul(tilde(basis_[i]), ket(basis_[j]), caps_);
        for (int k = 0; k < sz; ++k) t[i][j][k] = p.coefficient(mono_of(basis_[k].seq()));
      }
    return t;
  }

 private:
  int n_;
  R t_;
  Caps caps_;
  std::vector<Diagram> basis_;
  MPoly<R> kernel_;
  std::map<Diagram, MPoly<R>> tilde_;
  std::map<std::pair<Diagram, int>, MPoly<R>> ket_;
};

// Closed form at t = 1 for the largest exponent sequence alpha = (0,2,...,2n-2):
// pair st_sigma s_tau prod (1+u_i)^{n-1} prod_{i<=j} (1-u_i u_j)^{-1} against
// prod_{i<j} (1+u_i+u_j) in the Schur basis. Both sides live inside the
// (n-1)^n box with weight at most n(n-1)/2, so the pairing is a finite sum.
Int compute_A_largest(const Diagram& sigma, const Diagram& tau);

// All partitions with at most `rows` rows, parts at most `width`, and weight
// at most `max_weight`.
std::vector<std::vector<int>> partitions_in_box(int rows, int width, int max_weight);

}  // namespace fpltri
