#include "fpltri/matrix.hpp"

#include <stdexcept>

namespace fpltri {

std::vector<Int> nullspace_vector(Mat<Rat> m) {
  int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("not square");

  // Gaussian elimination to reduced row echelon form.
  std::vector<int> pivot_col(n, -1);
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int p = -1;
    for (int i = row; i < n; ++i)
      if (m(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(m(row, j), m(p, j));
    Rat inv = Rat(1) / m(row, col);
    for (int j = 0; j < n; ++j) m(row, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (int j = 0; j < n; ++j) m(i, j) -= f * m(row, j);
    }
    pivot_col[row] = col;
    ++row;
  }
  int rank = row;
  if (rank != n - 1) throw std::runtime_error("kernel dimension is not one");

  // The single free column gets value 1; pivots are read off the echelon form.
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = true;
  int free_col = -1;
  for (int j = 0; j < n; ++j)
    if (!is_pivot[j]) free_col = j;

  std::vector<Rat> v(n, Rat(0));
  v[free_col] = 1;
  for (int i = 0; i < rank; ++i) v[pivot_col[i]] = -m(i, free_col);

  // Clear denominators and divide by the common gcd.
  Int lcm = 1;
  for (const auto& x : v) {
    Int den = boost::multiprecision::denominator(x);
    lcm = boost::multiprecision::lcm(lcm, den);
  }
  std::vector<Int> w(n);
  for (int i = 0; i < n; ++i) w[i] = boost::multiprecision::numerator(v[i] * Rat(lcm));
  Int g = 0;
  for (const auto& x : w) g = boost::multiprecision::gcd(g, x);
  if (g != 0)
    for (auto& x : w) x /= g;
  for (const auto& x : w) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : w) y = -y;
    break;
  }
  return w;
}

}  // namespace fpltri
