#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "wreathgap/eigensolver.hpp"
#include "wreathgap/kernels.hpp"

using namespace wreathgap;
using kernels::Complex;

namespace {

const std::vector<std::size_t> kSizes = {0, 1, 2, 3, 4, 5, 7, 8, 9, 16, 31, 33, 100, 257};

std::vector<double> reals(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

std::vector<Complex> complexes(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<Complex> v(n);
  for (auto& x : v) x = Complex(d(rng), d(rng));
  return v;
}

double diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

const kernels::KernelTable* simd() {
  const kernels::KernelTable* t = kernels::avx2_table();
  if (!t) MESSAGE("AVX2 variant unavailable on this build or CPU; equivalence not exercised");
  return t;
}

}  // namespace

TEST_CASE("active table honours WREATHGAP_KERNELS") {
  const char* env = std::getenv("WREATHGAP_KERNELS");
  if (env && std::string_view(env) == "scalar") CHECK(&kernels::active() == &kernels::scalar_table());
  else if (kernels::avx2_table()) CHECK(&kernels::active() == kernels::avx2_table());
  else CHECK(&kernels::active() == &kernels::scalar_table());
}

TEST_CASE("scalar kernels against naive loops") {
  std::mt19937_64 rng(1);
  const auto& s = kernels::scalar_table();
  auto x = complexes(9, rng), y = complexes(9, rng);
  auto want = y;
  const Complex a(0.5, -2.0);
  for (std::size_t i = 0; i < 9; ++i) want[i] += a * x[i];
  s.caxpy(9, a, x.data(), y.data());
  CHECK(diff(want, y) <= 1e-15);

  auto u = reals(6, rng), v = reals(6, rng);
  double dot = 0.0;
  for (std::size_t i = 0; i < 6; ++i) dot += u[i] * v[i];
  CHECK(s.ddot(6, u.data(), v.data()) == doctest::Approx(dot).epsilon(1e-15));
}

TEST_CASE("caxpy and crot equivalence") {
  const auto* t = simd();
  if (!t) return;
  std::mt19937_64 rng(2);
  for (std::size_t n : kSizes) {
    CAPTURE(n);
    const auto x = complexes(n, rng);
    auto y1 = complexes(n, rng), y2 = y1;
    const Complex a(0.3, 0.7);
    kernels::scalar_table().caxpy(n, a, x.data(), y1.data());
    t->caxpy(n, a, x.data(), y2.data());
    CHECK(diff(y1, y2) <= 1e-14);

    auto p1 = complexes(n, rng), q1 = complexes(n, rng);
    auto p2 = p1, q2 = q1;
    const Complex ca(0.8, 0.0), cb(0.36, 0.48), cc(-0.36, 0.48), cd(0.8, 0.0);
    kernels::scalar_table().crot(n, p1.data(), q1.data(), ca, cb, cc, cd);
    t->crot(n, p2.data(), q2.data(), ca, cb, cc, cd);
    CHECK(diff(p1, p2) <= 1e-14);
    CHECK(diff(q1, q2) <= 1e-14);
  }
}

TEST_CASE("cgemm_acc equivalence") {
  const auto* t = simd();
  if (!t) return;
  std::mt19937_64 rng(3);
  for (std::size_t m : {1, 3, 8}) {
    for (std::size_t k : {1, 5, 16}) {
      for (std::size_t n : {1, 2, 7, 33}) {
        const auto a = complexes(m * k, rng), b = complexes(k * n, rng);
        auto c1 = complexes(m * n, rng), c2 = c1;
        kernels::scalar_table().cgemm_acc(m, k, n, a.data(), b.data(), c1.data());
        t->cgemm_acc(m, k, n, a.data(), b.data(), c2.data());
        CHECK(diff(c1, c2) <= 1e-13 * k);
      }
    }
  }
}

TEST_CASE("symmetric row kernels equivalence") {
  const auto* t = simd();
  if (!t) return;
  std::mt19937_64 rng(4);
  for (std::size_t n : kSizes) {
    CAPTURE(n);
    const auto row = reals(n, rng), v = reals(n, rng), w = reals(n, rng);
    auto p1 = reals(n, rng), p2 = p1;
    const double d1 = kernels::scalar_table().dsymv_row(n, row.data(), v.data(), 0.75, p1.data());
    const double d2 = t->dsymv_row(n, row.data(), v.data(), 0.75, p2.data());
    CHECK(std::abs(d1 - d2) <= 1e-13 * (1.0 + n));
    CHECK(diff(p1, p2) <= 1e-14);

    auto r1 = row, r2 = row;
    kernels::scalar_table().dsyr2_row(n, r1.data(), v.data(), w.data(), 0.25, -1.5);
    t->dsyr2_row(n, r2.data(), v.data(), w.data(), 0.25, -1.5);
    CHECK(diff(r1, r2) <= 1e-14);

    CHECK(std::abs(kernels::scalar_table().ddot(n, v.data(), w.data()) - t->ddot(n, v.data(), w.data())) <=
          1e-13 * (1.0 + n));
  }
}

TEST_CASE("eigenvalues agree across kernel tables") {
  const auto* t = simd();
  if (!t) return;
  std::mt19937_64 rng(5);
  std::normal_distribution<double> d;
  for (std::size_t n : {10, 80, 150}) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        const Complex z = i == j ? Complex(d(rng)) : Complex(d(rng), d(rng));
        m(i, j) = z;
        m(j, i) = std::conj(z);
      }
    const auto a = spectral::hermitian_eigenvalues(m, kernels::scalar_table());
    const auto b = spectral::hermitian_eigenvalues(m, *t);
    CHECK(diff(a, b) <= 1e-10);
  }
}
