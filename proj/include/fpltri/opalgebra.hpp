#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fpltri/bracket.hpp"
#include "fpltri/combinat.hpp"
#include "fpltri/matrix.hpp"
#include "fpltri/symfun.hpp"
#include "fpltri/tlmodel.hpp"

namespace fpltri {

// Chebyshev-like sequence U_{i+1} = -t U_i - U_{i-1} with U_0 = 1, U_{-1} = 0,
// extended to negative indices by running the recurrence backwards. At t = 1
// it cycles through 1, -1, 0 in both directions.
template <class R>
class Cheb {
 public:
  explicit Cheb(R t) : t_(std::move(t)) {
    pos_.push_back(R(1));
    neg_.push_back(R(0));
  }

  const R& u(int i) {
    if (i >= 0) {
      while (static_cast<int>(pos_.size()) <= i) {
        size_t k = pos_.size();
        R prev = k >= 2 ? pos_[k - 2] : neg_[0];
        pos_.push_back(R(0) - t_ * pos_[k - 1] - prev);
      }
      return pos_[i];
    }
    int k = -i - 1;  // neg_[k] holds U_{-1-k}
    while (static_cast<int>(neg_.size()) <= k) {
      size_t s = neg_.size();
      R next = s >= 2 ? neg_[s - 2] : pos_[0];
      neg_.push_back(R(0) - t_ * neg_[s - 1] - next);
    }
    return neg_[k];
  }

 private:
  R t_;
  std::vector<R> pos_, neg_;
};

// P^pi_gamma as a product of U values over the arches of pi. Valid for any
// nondecreasing nonnegative sequence gamma.
template <class R>
R p_entry(const LinkPattern& pi, const std::vector<int>& gamma, Cheb<R>& cheb) {
  R prod(1);
  for (int i = 0; i < pi.points(); ++i) {
    int j = pi.partner(i);
    if (j < i) continue;
    int cnt = 0;
    for (int g : gamma)
      if (g >= i && g < j) ++cnt;
    prod = prod * cheb.u(cnt - (j - i + 1) / 2);
    if (is_zero(prod)) return prod;
  }
  return prod;
}

// Index of each m-fold embedded diagram of the small basis inside the big
// basis (sizes n and n+m).
inline std::vector<int> embed_index_map(const std::vector<Diagram>& small_basis,
                                        const std::vector<Diagram>& big_basis, int m = 1) {
  std::vector<int> idx;
  idx.reserve(small_basis.size());
  for (const auto& d : small_basis) idx.push_back(basis_index(big_basis, d.embed(m)));
  return idx;
}

template <class R>
class OpContext {
 public:
  OpContext(int n, const R& t) : br_(n, t), cheb_(t) {
    patterns_ = basis_patterns(br_.basis());
    a_empty_ = br_.a_matrix(Diagram::empty(n));
    a_empty_inv_ = inverse_unitriangular(a_empty_);
  }

  int n() const { return br_.n(); }
  int size() const { return static_cast<int>(br_.basis().size()); }
  const R& t() const { return br_.t(); }
  const std::vector<Diagram>& basis() const { return br_.basis(); }
  const std::vector<LinkPattern>& patterns() const { return patterns_; }
  BracketContext<R>& bracket() { return br_; }
  const Mat<R>& a_empty() const { return a_empty_; }
  const Mat<R>& a_empty_inv() const { return a_empty_inv_; }

  R p_entry_at(const LinkPattern& pi, const std::vector<int>& gamma) {
    return p_entry(pi, gamma, cheb_);
  }

  Mat<R> p_matrix() {
    Mat<R> p(size(), size());
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j) p(i, j) = p_entry_at(patterns_[i], basis()[j].seq());
    return p;
  }

  Mat<R> p_inverse() { return inverse_unitriangular(p_matrix()); }

  const Mat<R>& phi() {
    if (phi_.rows() == 0) phi_ = involution_matrix(n(), t(), basis());
    return phi_;
  }

  // Column of K = A(0)^{-1} A^ext(0) at a general exponent vector. Targets
  // outside the staircase window gamma_i <= 2i get a one-off context with
  // caps widened to the target, which is sound for extracting that single
  // coefficient because multiplication only ever raises exponents.
  const std::vector<R>& k_column(const std::vector<int>& gamma) {
    auto it = kcols_.find(gamma);
    if (it != kcols_.end()) return it->second;
    if (static_cast<int>(gamma.size()) != n())
      throw std::invalid_argument("sequence length differs from the system size");
    std::vector<R> v;
    bool valid = true, inside = true;
    for (size_t i = 0; i < gamma.size(); ++i) {
      if (gamma[i] < 0) valid = false;
      if (gamma[i] > 2 * static_cast<int>(i)) inside = false;
    }
    if (!valid) {
      v.assign(size(), R(0));
    } else {
      std::vector<R> ext(size());
      if (inside) {
        for (int i = 0; i < size(); ++i) ext[i] = br_.compute_A_ext(basis()[i], gamma);
      } else {
        Caps caps = Caps::staircase(n());
        caps.total = 0;
        for (size_t i = 0; i < gamma.size(); ++i) {
          caps.var[i] = std::max(caps.var[i], gamma[i]);
          caps.total += gamma[i];
        }
        caps.total = std::max(caps.total, n() * (n() - 1));
        BracketContext<R> wide(n(), t(), caps);
        for (int i = 0; i < size(); ++i) ext[i] = wide.compute_A_ext(basis()[i], gamma);
      }
      v = a_empty_inv_.apply(ext);
    }
    return kcols_.emplace(gamma, std::move(v)).first->second;
  }

  // C(lambda) for an arbitrary partition: zero unless lambda fits in the
  // staircase, otherwise assembled from K columns, one per monomial of
  // s_lambda.
  Mat<R> c_matrix(const std::vector<int>& lambda) {
    Mat<R> c(size(), size());
    for (size_t i = 0; i < lambda.size(); ++i) {
      int part = lambda[i];
      if (part > n() - 1 - static_cast<int>(i)) return c;  // outside the staircase
    }
    const MPoly<Int>& s = schur_poly(lambda, n(), br_.caps());
    for (int j = 0; j < size(); ++j) {
      const auto& alpha = basis()[j].seq();
      for (const auto& [m, coef] : s.terms()) {
        std::vector<int> gamma(n());
        bool valid = true;
        for (int i = 0; i < n() && valid; ++i) {
          gamma[i] = alpha[i] - mono_exp(m, i);
          if (gamma[i] < 0) valid = false;
        }
        if (!valid) continue;
        const auto& col = k_column(gamma);
        for (int i = 0; i < size(); ++i) c(i, j) += R(coef) * col[i];
      }
    }
    return c;
  }

  Mat<R> c_column_op(int height) { return c_matrix(std::vector<int>(height, 1)); }

  // C = sum_i t^i C(1^i), the one-step transfer operator in the diagram basis.
  const Mat<R>& big_c() {
    if (big_c_.rows() == 0) {
      Mat<R> c(size(), size());
      R tp(1);
      for (int i = 0; i < n(); ++i) {
        Mat<R> ci = c_column_op(i);
        ci.scale(tp);
        c = c + ci;
        tp = tp * t();
      }
      big_c_ = c;
    }
    return big_c_;
  }

  Mat<R> c_tilde(const Diagram& lambda) {
    const Mat<R>& f = phi();
    int col = basis_index(basis(), lambda);
    Mat<R> c(size(), size());
    for (int mu = 0; mu < size(); ++mu) {
      if (is_zero(f(mu, col))) continue;
      Mat<R> cm = c_matrix(basis()[mu].partition());
      cm.scale(f(mu, col));
      c = c + cm;
    }
    return c;
  }

  // LR(lambda)^mu_tau = c^mu_{lambda,tau}, rows mu, columns tau.
  Mat<R> lr_matrix(const Diagram& lambda) {
    Mat<R> m(size(), size());
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        m(i, j) = R(lr_coefficient(lambda, basis()[j], basis()[i]));
    return m;
  }

  Mat<R> lr_tilde(const Diagram& lambda) { return phi() * lr_matrix(lambda) * phi(); }

  Mat<R> r_matrix() { return a_empty_inv_ * phi().transpose() * a_empty_; }

  // The two constructions of the z-weighted transfer operator on link
  // patterns. Their equality is the P^ext = P K identity.
  Mat<R> c_z_via_k(const R& z) {
    Mat<R> cz(size(), size());
    R zp(1);
    for (int i = 0; i < n(); ++i) {
      Mat<R> ci = c_column_op(i);
      ci.scale(zp);
      cz = cz + ci;
      zp = zp * z;
    }
    return p_matrix() * cz * p_inverse();
  }

  Mat<R> c_z_via_pext(const R& z) {
    Mat<R> num(size(), size());
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j) {
        const auto& alpha = basis()[j].seq();
        R entry(0);
        for (unsigned mask = 0; mask < (1u << n()); ++mask) {
          std::vector<int> gamma(n());
          bool valid = true;
          int ones = 0;
          for (int v = 0; v < n() && valid; ++v) {
            int eps = (mask >> v) & 1;
            ones += eps;
            gamma[v] = alpha[v] - eps;
            if (gamma[v] < 0) valid = false;
          }
          if (!valid) continue;
          R term = p_entry_at(patterns_[i], gamma);
          for (int rep = 0; rep < ones; ++rep) term = term * z;
          entry += term;
        }
        num(i, j) = entry;
      }
    return num * p_inverse();
  }

  // c = P C P^{-1}, the transfer operator on link patterns.
  Mat<R> c_small() { return p_matrix() * big_c() * p_inverse(); }

  std::vector<R> psi() { return br_.psi_vector(); }

  // Ground state coefficients on link patterns: psi = Psi P^{-1}.
  std::vector<R> psi_link() { return psi() * p_inverse(); }

  // A_{sigma,alpha,tau} over all alpha from the transfer operators:
  // Psi Ct(sigma) C(tau) C^{n-1}.
  std::vector<R> a_from_psi(const Diagram& sigma, const Diagram& tau) {
    std::vector<R> row = psi();
    row = row * c_tilde(sigma);
    row = row * c_matrix(tau.partition());
    for (int i = 0; i < n() - 1; ++i) row = row * big_c();
    return row;
  }

 private:
  BracketContext<R> br_;
  Cheb<R> cheb_;
  std::vector<LinkPattern> patterns_;
  Mat<R> a_empty_, a_empty_inv_;
  Mat<R> phi_, big_c_;
  std::map<std::vector<int>, std::vector<R>> kcols_;
};

// Dual Jacobi-Trudi determinant for C(lambda) in terms of the column
// operators: det( C(1^{lambda'_i - i + j}) ), expanded over permutations.
template <class R>
Mat<R> c_matrix_jacobi_trudi(OpContext<R>& ctx, const Diagram& lambda) {
  std::vector<int> conj;
  for (int part : lambda.transpose().partition())
    if (part > 0) conj.push_back(part);
  int k = static_cast<int>(conj.size());
  if (k == 0) return Mat<R>::identity(ctx.size());

  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  Mat<R> total(ctx.size(), ctx.size());
  do {
    int inv = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inv;
    Mat<R> prod = Mat<R>::identity(ctx.size());
    bool zero = false;
    for (int i = 0; i < k && !zero; ++i) {
      int height = conj[i] - i + perm[i];
      if (height < 0) {
        zero = true;
        break;
      }
      prod = prod * ctx.c_column_op(height);
    }
    if (zero) continue;
    if (inv % 2) prod.scale(R(-1));
    total = total + prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace fpltri
