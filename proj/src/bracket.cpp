#include "fpltri/bracket.hpp"

namespace fpltri {

std::vector<std::vector<int>> partitions_in_box(int rows, int width, int max_weight) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int row, int prev, int weight) -> void {
    out.push_back(cur);
    if (row == rows) return;
    for (int part = 1; part <= std::min(prev, width); ++part) {
      if (weight + part > max_weight) break;
      cur.push_back(part);
      self(self, row + 1, part, weight + part);
      cur.pop_back();
    }
  };
  rec(rec, 0, width, 0);
  return out;
}

Int compute_A_largest(const Diagram& sigma, const Diagram& tau) {
  int n = sigma.n();
  if (tau.n() != n) throw std::invalid_argument("size mismatch");
  int half = n * (n - 1) / 2;

  // Caps for the series side (weight at most half) and for the alternant
  // products (weight at most n(n-1), exponent of u_i at most n-1+i).
  Caps caps_series, caps_alt;
  for (int i = 0; i < n; ++i) caps_series.var[i] = caps_alt.var[i] = n - 1 + i;
  caps_series.total = half;
  caps_alt.total = n * (n - 1);

  // prod_{i<=j} (1 - u_i u_j)^{-1}, truncated.
  MPoly<Int> series = MPoly<Int>::constant(n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      MPoly<Int> f(n);
      Mono step = mono_unit(i, 1) + mono_unit(j, 1);
      for (int k = 0; 2 * k <= half; ++k) {
        Mono m = static_cast<Mono>(k) * step;
        if (!caps_series.ok(m)) break;
        f.add_term(m, 1);
      }
      series = mul(series, f, caps_series);
    }

  MPoly<Int> bra = tilde_schur<Int>(sigma, Int(1), caps_series);
  bra = mul(bra, convert_poly<Int>(schur_poly(tau.partition(), n, caps_series)), caps_series);
  bra = mul(bra, one_plus_u_power<Int>(n, n - 1, caps_series), caps_series);
  bra = mul(bra, series, caps_series);

  // prod_{i<j} (1 + u_i + u_j)
  MPoly<Int> ket = MPoly<Int>::constant(n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      MPoly<Int> f(n);
      f.add_term(0, 1);
      f.add_term(mono_unit(i, 1), 1);
      f.add_term(mono_unit(j, 1), 1);
      ket = mul(ket, f, caps_series);
    }

  std::vector<std::vector<int>> betas = partitions_in_box(n, n - 1, half);
  std::vector<std::vector<int>> seqs;
  seqs.reserve(betas.size());
  for (const auto& beta : betas) {
    std::vector<int> seq(n);
    for (int i = 0; i < n; ++i) {
      int row = n - 1 - i;  // beta is padded with trailing zero rows
      int part = row < static_cast<int>(beta.size()) ? beta[row] : 0;
      seq[i] = part + i;
    }
    seqs.push_back(seq);
  }

  std::vector<Int> bra_c = alternant_coefficients(bra, seqs, caps_alt);
  std::vector<Int> ket_c = alternant_coefficients(ket, seqs, caps_alt);
  Int total = 0;
  for (size_t i = 0; i < seqs.size(); ++i) total += bra_c[i] * ket_c[i];
  return total;
}

}  // namespace fpltri
