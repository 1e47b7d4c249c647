#include "wreathgap/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace wreathgap::spectral {
namespace {

constexpr int kMaxSweeps = 80;
constexpr int kMaxQlIterations = 60;

CMatrix symmetrized(const CMatrix& m) {
  if (!m.square()) throw InvalidArgument("eigenvalues of a non-square matrix");
  const double scale = 1.0 + max_abs(m);
  if (hermitian_defect(m) > 1e-8 * scale)
    throw InvalidArgument("matrix is not Hermitian within tolerance");
  CMatrix h(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    h(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

// Cyclic Jacobi on a Hermitian matrix (modified in place). When vt is
// non-null it accumulates the transposed eigenvector matrix row by row.
void jacobi_sweeps(CMatrix& a, CMatrix* vt, const kernels::KernelTable& k) {
  const std::size_t n = a.rows();
  double frob2 = 0.0;
  for (const auto& v : a.values()) frob2 += std::norm(v);
  const double target = 1e-30 * std::max(frob2, std::numeric_limits<double>::min());

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (off <= target) return;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex b = a(p, q);
        const double babs = std::abs(b);
        if (babs == 0.0) continue;
        const double app = a(p, p).real(), aqq = a(q, q).real();
        if (sweep > 3 && babs < 1e-18 * (std::abs(app) + std::abs(aqq))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const Complex phase = std::conj(b / babs);
        const double zeta = (aqq - app) / (2.0 * babs);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;
        // Q = diag(1, phase) · [[c, s], [-s, c]] restricted to (p, q).
        const Complex qpp = c, qpq = s, qqp = -s * phase, qqq = c * phase;

        k.crot(n, a.row(p), a.row(q), std::conj(qpp), std::conj(qqp), std::conj(qpq),
               std::conj(qqq));
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          a(r, p) = std::conj(a(p, r));
          a(r, q) = std::conj(a(q, r));
        }
        a(p, p) = app - t * babs;
        a(q, q) = aqq + t * babs;
        a(p, q) = a(q, p) = 0.0;

        if (vt) k.crot(n, vt->row(p), vt->row(q), qpp, qqp, qpq, qqq);
      }
    }
  }
  throw Error("Jacobi eigensolver did not converge");
}

// Householder reduction of the upper triangle to tridiagonal (d, e), where
// e[i] couples i and i+1; e[n-1] is left at zero.
void tridiagonalize(RMatrix& a, std::vector<double>& d, std::vector<double>& e,
                    const kernels::KernelTable& k) {
  const std::size_t n = a.rows();
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  std::vector<double> v(n), p(n), w(n);
  for (std::size_t col = 0; col + 2 < n; ++col) {
    const std::size_t m = n - col - 1;
    const double* x = a.row(col) + col + 1;
    const double xnorm = std::sqrt(k.ddot(m, x, x));
    d[col] = a(col, col);
    if (xnorm == 0.0) {
      e[col] = 0.0;
      continue;
    }
    const double alpha = x[0] > 0.0 ? -xnorm : xnorm;
    std::copy(x, x + m, v.begin());
    v[0] -= alpha;
    const double vv = k.ddot(m, v.data(), v.data());
    e[col] = alpha;
    if (vv == 0.0) continue;
    const double beta = 2.0 / vv;

    std::fill(p.begin(), p.begin() + m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      const double* row = a.row(col + 1 + i) + col + 1 + i;
      const double dot = k.dsymv_row(m - i - 1, row + 1, v.data() + i + 1, v[i], p.data() + i + 1);
      p[i] += row[0] * v[i] + dot;
    }
    for (std::size_t i = 0; i < m; ++i) p[i] *= beta;
    const double kk = 0.5 * beta * k.ddot(m, p.data(), v.data());
    for (std::size_t i = 0; i < m; ++i) w[i] = p[i] - kk * v[i];
    for (std::size_t i = 0; i < m; ++i) {
      double* row = a.row(col + 1 + i) + col + 1 + i;
      k.dsyr2_row(m - i, row, v.data() + i, w.data() + i, v[i], w[i]);
    }
  }
  if (n >= 2) {
    d[n - 2] = a(n - 2, n - 2);
    e[n - 2] = a(n - 2, n - 1);
  }
  if (n >= 1) d[n - 1] = a(n - 1, n - 1);
}

// Implicit QL with Wilkinson-style shifts on a symmetric tridiagonal matrix.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == kMaxQlIterations) throw Error("tridiagonal QL did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

std::vector<double> jacobi_eigenvalues(const CMatrix& m, const kernels::KernelTable& k) {
  CMatrix a = symmetrized(m);
  jacobi_sweeps(a, nullptr, k);
  std::vector<double> values(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) values[i] = a(i, i).real();
  std::sort(values.begin(), values.end());
  return values;
}

EigenSystem hermitian_eigensystem(const CMatrix& m, const kernels::KernelTable& k) {
  CMatrix a = symmetrized(m);
  const std::size_t n = a.rows();
  CMatrix vt = CMatrix::identity(n);
  jacobi_sweeps(a, &vt, k);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  EigenSystem out{std::vector<double>(n), CMatrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = vt(order[j], i);
  }
  return out;
}

std::vector<double> symmetric_eigenvalues(const RMatrix& m, const kernels::KernelTable& k) {
  if (!m.square()) throw InvalidArgument("eigenvalues of a non-square matrix");
  RMatrix a = m;
  std::vector<double> d, e;
  tridiagonalize(a, d, e, k);
  tridiagonal_ql(d, e);
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m, const kernels::KernelTable& k) {
  const CMatrix h = symmetrized(m);
  const std::size_t n = h.rows();
  if (n <= kJacobiMaxDim) return jacobi_eigenvalues(h, k);

  if (max_abs_imag(h) == 0.0) return symmetric_eigenvalues(real_part(h), k);

  RMatrix big(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex v = h(i, j);
      big(i, j) = big(n + i, n + j) = v.real();
      big(i, n + j) = -v.imag();
      big(n + i, j) = v.imag();
    }
  const std::vector<double> doubled = symmetric_eigenvalues(big, k);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return values;
}

}  // namespace wreathgap::spectral
