// AVX2 + FMA variants. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after the runtime feature check in kernels.cpp.

#include <immintrin.h>

#include "wreathgap/kernels.hpp"

namespace wreathgap::kernels {
namespace {

// Two interleaved complex numbers per register: [re0, im0, re1, im1].
inline __m256d cmul_broadcast(__m256d ar, __m256d ai, __m256d x) {
  const __m256d swapped = _mm256_permute_pd(x, 0b0101);
  return _mm256_fmaddsub_pd(ar, x, _mm256_mul_pd(ai, swapped));
}

void caxpy_avx2(std::size_t n, Complex a, const Complex* x, Complex* y) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul_broadcast(ar, ai, xv)));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] = Complex(y[i].real() + a.real() * xr - a.imag() * xi,
                   y[i].imag() + a.real() * xi + a.imag() * xr);
  }
}

void cgemm_acc_avx2(std::size_t m, std::size_t k, std::size_t n, const Complex* a,
                    const Complex* b, Complex* c) {
  for (std::size_t i = 0; i < m; ++i) {
    Complex* ci = c + i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const Complex ail = a[i * k + l];
      if (ail == Complex(0.0, 0.0)) continue;
      caxpy_avx2(n, ail, b + l * n, ci);
    }
  }
}

void crot_avx2(std::size_t n, Complex* x, Complex* y, Complex a, Complex b, Complex c,
               Complex d) {
  const __m256d ar = _mm256_set1_pd(a.real()), ai = _mm256_set1_pd(a.imag());
  const __m256d br = _mm256_set1_pd(b.real()), bi = _mm256_set1_pd(b.imag());
  const __m256d cr = _mm256_set1_pd(c.real()), ci = _mm256_set1_pd(c.imag());
  const __m256d dr = _mm256_set1_pd(d.real()), di = _mm256_set1_pd(d.imag());
  auto* xd = reinterpret_cast<double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    const __m256d xn = _mm256_add_pd(cmul_broadcast(ar, ai, xv), cmul_broadcast(br, bi, yv));
    const __m256d yn = _mm256_add_pd(cmul_broadcast(cr, ci, xv), cmul_broadcast(dr, di, yv));
    _mm256_storeu_pd(xd + 2 * i, xn);
    _mm256_storeu_pd(yd + 2 * i, yn);
  }
  for (; i < n; ++i) {
    const Complex xi = x[i], yi = y[i];
    x[i] = a * xi + b * yi;
    y[i] = c * xi + d * yi;
  }
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dsymv_row_avx2(std::size_t n, const double* row, const double* v, double vi,
                      double* p) {
  const __m256d viv = _mm256_set1_pd(vi);
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 8 <= n; j += 8) {
    const __m256d r0 = _mm256_loadu_pd(row + j), r1 = _mm256_loadu_pd(row + j + 4);
    acc0 = _mm256_fmadd_pd(r0, _mm256_loadu_pd(v + j), acc0);
    acc1 = _mm256_fmadd_pd(r1, _mm256_loadu_pd(v + j + 4), acc1);
    _mm256_storeu_pd(p + j, _mm256_fmadd_pd(viv, r0, _mm256_loadu_pd(p + j)));
    _mm256_storeu_pd(p + j + 4, _mm256_fmadd_pd(viv, r1, _mm256_loadu_pd(p + j + 4)));
  }
  double dot = hsum(_mm256_add_pd(acc0, acc1));
  for (; j < n; ++j) {
    dot += row[j] * v[j];
    p[j] += vi * row[j];
  }
  return dot;
}

void dsyr2_row_avx2(std::size_t n, double* row, const double* v, const double* w, double vi,
                    double wi) {
  const __m256d viv = _mm256_set1_pd(vi), wiv = _mm256_set1_pd(wi);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    __m256d r = _mm256_loadu_pd(row + j);
    r = _mm256_fnmadd_pd(viv, _mm256_loadu_pd(w + j), r);
    r = _mm256_fnmadd_pd(wiv, _mm256_loadu_pd(v + j), r);
    _mm256_storeu_pd(row + j, r);
  }
  for (; j < n; ++j) row[j] -= vi * w[j] + wi * v[j];
}

double ddot_avx2(std::size_t n, const double* x, const double* y) {
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

constexpr KernelTable kAvx2{
    "avx2",         caxpy_avx2,     cgemm_acc_avx2, crot_avx2,
    dsymv_row_avx2, dsyr2_row_avx2, ddot_avx2,
};

}  // namespace

const KernelTable& avx2_table_impl() { return kAvx2; }

}  // namespace wreathgap::kernels
