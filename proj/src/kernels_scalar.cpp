#include "wreathgap/kernels.hpp"

namespace wreathgap::kernels {
namespace {

void caxpy_scalar(std::size_t n, Complex a, const Complex* x, Complex* y) {
  const double ar = a.real(), ai = a.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] = Complex(y[i].real() + ar * xr - ai * xi, y[i].imag() + ar * xi + ai * xr);
  }
}

void cgemm_acc_scalar(std::size_t m, std::size_t k, std::size_t n, const Complex* a,
                      const Complex* b, Complex* c) {
  for (std::size_t i = 0; i < m; ++i) {
    Complex* ci = c + i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const Complex ail = a[i * k + l];
      if (ail == Complex(0.0, 0.0)) continue;
      caxpy_scalar(n, ail, b + l * n, ci);
    }
  }
}

void crot_scalar(std::size_t n, Complex* x, Complex* y, Complex a, Complex b, Complex c,
                 Complex d) {
  for (std::size_t i = 0; i < n; ++i) {
    const Complex xi = x[i], yi = y[i];
    x[i] = a * xi + b * yi;
    y[i] = c * xi + d * yi;
  }
}

double dsymv_row_scalar(std::size_t n, const double* row, const double* v, double vi,
                        double* p) {
  double dot = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    dot += row[j] * v[j];
    p[j] += vi * row[j];
  }
  return dot;
}

void dsyr2_row_scalar(std::size_t n, double* row, const double* v, const double* w,
                      double vi, double wi) {
  for (std::size_t j = 0; j < n; ++j) row[j] -= vi * w[j] + wi * v[j];
}

double ddot_scalar(std::size_t n, const double* x, const double* y) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

constexpr KernelTable kScalar{
    "scalar",         caxpy_scalar,     cgemm_acc_scalar, crot_scalar,
    dsymv_row_scalar, dsyr2_row_scalar, ddot_scalar,
};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace wreathgap::kernels
