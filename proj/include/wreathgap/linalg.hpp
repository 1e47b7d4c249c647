#pragma once
// Dense row-major matrices over double and std::complex<double>.

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wreathgap {

using Complex = std::complex<double>;

/// Base of all library errors. Subclasses separate the CLI's exit-code classes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input (files, labels, preconditions the caller controls).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// A size guard was exceeded and no override was given.
class GuardExceeded : public Error {
public:
  using Error::Error;
};

template <class T>
class Matrix {
public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  T* row(std::size_t r) { return data_.data() + r * cols_; }
  const T* row(std::size_t r) const { return data_.data() + r * cols_; }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  std::span<T> values() { return data_; }
  std::span<const T> values() const { return data_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(T s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  bool operator==(const Matrix&) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RMatrix = Matrix<double>;
using CMatrix = Matrix<Complex>;

template <class T>
Matrix<T>& Matrix<T>::operator+=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw Error("matrix shape mismatch in +=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

template <class T>
Matrix<T>& Matrix<T>::operator-=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw Error("matrix shape mismatch in -=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

template <class T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  a += b;
  return a;
}
template <class T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  a -= b;
  return a;
}
template <class T>
Matrix<T> operator*(T s, Matrix<T> a) {
  a *= s;
  return a;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b);
RMatrix operator*(const RMatrix& a, const RMatrix& b);

/// y += alpha * x over whole matrices, via the active kernel table.
void accumulate(CMatrix& y, Complex alpha, const CMatrix& x);

CMatrix to_complex(const RMatrix& m);
CMatrix adjoint(const CMatrix& m);
RMatrix transpose(const RMatrix& m);
CMatrix kron(const CMatrix& a, const CMatrix& b);
Complex trace(const CMatrix& m);

double max_abs(const CMatrix& m);
double max_abs_diff(const CMatrix& a, const CMatrix& b);
double max_abs_imag(const CMatrix& m);
/// ‖M − M†‖_max.
double hermitian_defect(const CMatrix& m);
/// ‖M†M − I‖_max.
double unitarity_defect(const CMatrix& m);

/// Complex matrix with the same real entries; imaginary parts dropped.
RMatrix real_part(const CMatrix& m);

}  // namespace wreathgap
