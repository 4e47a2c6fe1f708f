#pragma once

#include <stdexcept>
#include <vector>

#include "fpltri/numbers.hpp"

namespace fpltri {

template <class R>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, R(0)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  R& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const R& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Mat transpose() const {
    Mat m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Mat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const R& v = a(i, k);
        if (is_zero(v)) continue;
        for (int j = 0; j < b.cols_; ++j) {
          if (is_zero(b(k, j))) continue;
          r(i, j) += v * b(k, j);
        }
      }
    return r;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix shape mismatch");
    Mat r = a;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
  }

  friend Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix shape mismatch");
    Mat r = a;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
    return r;
  }

  void scale(const R& c) {
    for (auto& v : a_) v *= c;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  // Row vector times matrix.
  friend std::vector<R> operator*(const std::vector<R>& v, const Mat& m) {
    if (static_cast<int>(v.size()) != m.rows_) throw std::invalid_argument("shape mismatch");
    std::vector<R> r(m.cols_, R(0));
    for (int i = 0; i < m.rows_; ++i) {
      if (is_zero(v[i])) continue;
      for (int j = 0; j < m.cols_; ++j) r[j] += v[i] * m(i, j);
    }
    return r;
  }

  // Matrix times column vector.
  std::vector<R> apply(const std::vector<R>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("shape mismatch");
    std::vector<R> r(rows_, R(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!is_zero(v[j])) r[i] += (*this)(i, j) * v[j];
    return r;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<R> a_;
};

// Inverse of an upper unitriangular matrix by back substitution. Stays in
// the coefficient ring, so it also works for polynomial entries. Throws if
// the matrix is not upper unitriangular.
template <class R>
Mat<R> inverse_unitriangular(const Mat<R>& m) {
  int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("not square");
  for (int i = 0; i < n; ++i) {
    if (!(m(i, i) == R(1))) throw std::invalid_argument("diagonal entry is not 1");
    for (int j = 0; j < i; ++j)
      if (!is_zero(m(i, j))) throw std::invalid_argument("matrix is not upper triangular");
  }
  Mat<R> x = Mat<R>::identity(n);
  for (int j = 0; j < n; ++j)
    for (int i = j - 1; i >= 0; --i) {
      R s(0);
      for (int k = i + 1; k <= j; ++k) s += m(i, k) * x(k, j);
      x(i, j) = R(0) - s;
    }
  return x;
}

template <class RFrom, class RTo>
Mat<RTo> convert_mat(const Mat<RFrom>& m) {
  Mat<RTo> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = RTo(m(i, j));
  return r;
}

// One-dimensional nullspace of a square rational matrix, as a coprime
// integer vector whose first nonzero entry is positive. Throws if the kernel
// dimension is not exactly one.
std::vector<Int> nullspace_vector(Mat<Rat> m);

}  // namespace fpltri
