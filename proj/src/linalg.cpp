#include "wreathgap/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "wreathgap/kernels.hpp"

namespace wreathgap {

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix shape mismatch in product");
  CMatrix c(a.rows(), b.cols());
  kernels::active().cgemm_acc(a.rows(), a.cols(), b.cols(), a.data(), b.data(), c.data());
  return c;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix shape mismatch in product");
  RMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const double ail = a(i, l);
      if (ail == 0.0) continue;
      const double* bl = b.row(l);
      double* ci = c.row(i);
      for (std::size_t j = 0; j < b.cols(); ++j) ci[j] += ail * bl[j];
    }
  return c;
}

void accumulate(CMatrix& y, Complex alpha, const CMatrix& x) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw Error("matrix shape mismatch in accumulate");
  kernels::active().caxpy(x.values().size(), alpha, x.data(), y.data());
}

CMatrix to_complex(const RMatrix& m) {
  CMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.values().size(); ++i) c.data()[i] = m.data()[i];
  return c;
}

RMatrix real_part(const CMatrix& m) {
  RMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.values().size(); ++i) r.data()[i] = m.data()[i].real();
  return r;
}

CMatrix adjoint(const CMatrix& m) {
  CMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = std::conj(m(i, j));
  return t;
}

RMatrix transpose(const RMatrix& m) {
  RMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t s = 0; s < b.cols(); ++s)
          k(i * b.rows() + r, j * b.cols() + s) = aij * b(r, s);
    }
  return k;
}

Complex trace(const CMatrix& m) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

double max_abs(const CMatrix& m) {
  double r = 0.0;
  for (const auto& v : m.values()) r = std::max(r, std::abs(v));
  return r;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix shape mismatch in diff");
  double r = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i)
    r = std::max(r, std::abs(a.data()[i] - b.data()[i]));
  return r;
}

double max_abs_imag(const CMatrix& m) {
  double r = 0.0;
  for (const auto& v : m.values()) r = std::max(r, std::abs(v.imag()));
  return r;
}

double hermitian_defect(const CMatrix& m) {
  if (!m.square()) throw Error("hermitian_defect needs a square matrix");
  double r = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      r = std::max(r, std::abs(m(i, j) - std::conj(m(j, i))));
  return r;
}

double unitarity_defect(const CMatrix& m) {
  return max_abs_diff(adjoint(m) * m, CMatrix::identity(m.cols()));
}

}  // namespace wreathgap
