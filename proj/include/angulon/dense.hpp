#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace angulon {

using cplx = std::complex<double>;

// Minimal dense row-major matrix. Sized once at construction; element access
// is unchecked. All numerical kernels in this library run on desk-scale
// matrices, so storage is always dense and owned.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  double max_abs() const {
    double m = 0.0;
    for (const T& v : data_) m = std::max(m, static_cast<double>(std::abs(v)));
    return m;
  }

  double frobenius() const {
    double s = 0.0;
    for (const T& v : data_) {
      const double a = std::abs(v);
      s += a * a;
    }
    return std::sqrt(s);
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
  }

  friend Matrix operator*(T s, const Matrix& a) {
    Matrix r = a;
    for (T& v : r.data_) v *= s;
    return r;
  }

  std::vector<T> apply(const std::vector<T>& x) const {
    std::vector<T> y(rows_, T{});
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<cplx>;

inline ComplexMatrix to_complex(const RealMatrix& a) {
  ComplexMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = cplx(a(i, j), 0.0);
  return r;
}

inline RealMatrix real_part(const ComplexMatrix& a) {
  RealMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).real();
  return r;
}

inline double max_imag_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const cplx& v : a.data()) m = std::max(m, std::abs(v.imag()));
  return m;
}

inline ComplexMatrix conj_transpose(const ComplexMatrix& a) {
  ComplexMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

template <typename T>
Matrix<T> matrix_pow(const Matrix<T>& a, unsigned k) {
  Matrix<T> r = Matrix<T>::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

}  // namespace angulon
