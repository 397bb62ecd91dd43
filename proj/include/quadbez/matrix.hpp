#ifndef QUADBEZ_MATRIX_HPP
#define QUADBEZ_MATRIX_HPP

#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

#include "quadbez/scalar.hpp"

namespace quadbez {

// Small dense matrix over either scalar mode. The matrices in this library
// top out around 30x30, so nothing clever is needed here; Eigen is used only
// where an eigenvalue decomposition is required.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), d_(rows * cols, T{}) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = scalar_from_int<T>(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return d_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return d_[i * cols_ + j];
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  Matrix conj_transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = conj_of((*this)(i, j));
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (exactly_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          m(i, j) += aik * b(k, j);
      }
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Matrix m = a;
    for (std::size_t k = 0; k < m.d_.size(); ++k) m.d_[k] += b.d_[k];
    return m;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Matrix m = a;
    for (std::size_t k = 0; k < m.d_.size(); ++k) m.d_[k] -= b.d_[k];
    return m;
  }

  Matrix operator-() const {
    Matrix m = *this;
    for (auto& v : m.d_) v = -v;
    return m;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix m = a;
    for (auto& v : m.d_) v = s * v;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : d_) {
      double a = abs_of(v);
      s += a * a;
    }
    return std::sqrt(s);
  }

  bool is_zero() const {
    for (const auto& v : d_)
      if (!exactly_zero(v)) return false;
    return true;
  }

  Matrix<Complex> to_complex_matrix() const {
    Matrix<Complex> m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        m(i, j) = quadbez::to_complex((*this)(i, j));
    return m;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> d_;
};

}  // namespace quadbez

#endif
