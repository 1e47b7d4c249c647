#pragma once
// Inner-loop kernels with a scalar reference and SIMD variants.
//
// Every variant implements the same contract as the scalar table; variants are
// allowed to differ from it only by floating-point reassociation (FMA, lane-wise
// partial sums). The active table is chosen once at first use from the CPU
// features, and can be forced with WREATHGAP_KERNELS=scalar|avx2.

#include <complex>
#include <cstddef>

namespace wreathgap::kernels {

using Complex = std::complex<double>;

struct KernelTable {
  const char* name;

  /// y[i] += a * x[i]
  void (*caxpy)(std::size_t n, Complex a, const Complex* x, Complex* y);

  /// C (m×n) += A (m×k) · B (k×n); all row-major, contiguous.
  void (*cgemm_acc)(std::size_t m, std::size_t k, std::size_t n, const Complex* a,
                    const Complex* b, Complex* c);

  /// (x, y) ← (a·x + b·y, c·x + d·y), elementwise. Jacobi rotations.
  void (*crot)(std::size_t n, Complex* x, Complex* y, Complex a, Complex b, Complex c,
               Complex d);

  /// Fused row step of a symmetric matrix-vector product using the upper
  /// triangle: returns dot(row, v) and performs p[j] += vi * row[j].
  double (*dsymv_row)(std::size_t n, const double* row, const double* v, double vi,
                      double* p);

  /// row[j] -= vi * w[j] + wi * v[j]. Symmetric rank-2 update of one row.
  void (*dsyr2_row)(std::size_t n, double* row, const double* v, const double* w, double vi,
                    double wi);

  /// sum x[i] * y[i]
  double (*ddot)(std::size_t n, const double* x, const double* y);
};

const KernelTable& scalar_table();

/// nullptr when the variant was not compiled in or the CPU lacks the features.
const KernelTable* avx2_table();

/// The table selected for this process.
const KernelTable& active();

}  // namespace wreathgap::kernels
