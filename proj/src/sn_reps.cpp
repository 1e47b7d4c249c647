#include "wreathgap/sn_reps.hpp"

#include <cmath>
#include <map>

namespace wreathgap::reps {

using combinatorics::Partition;
using groups::Permutation;

YoungOrthogonalForm::YoungOrthogonalForm(const Partition& shape) : shape_(shape) {
  tableaux_ = combinatorics::tableaux_and_dimension(shape).tableaux;
  const int n = shape.size();
  const std::size_t d = tableaux_.size();

  std::map<std::vector<std::vector<int>>, std::size_t> index;
  for (std::size_t j = 0; j < d; ++j) index.emplace(tableaux_[j].rows, j);

  for (int k = 1; k < n; ++k) {
    RMatrix s(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      const auto& t = tableaux_[j];
      const auto row = t.row_of(), col = t.col_of();
      if (row[k] == row[k + 1]) {
        s(j, j) = 1.0;
      } else if (col[k] == col[k + 1]) {
        s(j, j) = -1.0;
      } else {
        const double r = (col[k + 1] - row[k + 1]) - (col[k] - row[k]);
        auto swapped = t.rows;
        std::swap(swapped[row[k]][col[k]], swapped[row[k + 1]][col[k + 1]]);
        s(j, j) = 1.0 / r;
        s(j, index.at(swapped)) = std::sqrt(1.0 - 1.0 / (r * r));
      }
    }
    gens_.push_back(std::move(s));
  }
}

std::vector<int> adjacent_factorization(const Permutation& sigma) {
  std::vector<int> a = sigma.images();
  std::vector<int> word;
  // Bubble sort: each swap at positions (k, k+1) right-multiplies by s_k.
  for (std::size_t pass = 0; pass < a.size(); ++pass) {
    bool swapped = false;
    for (std::size_t k = 0; k + 1 < a.size(); ++k)
      if (a[k] > a[k + 1]) {
        std::swap(a[k], a[k + 1]);
        word.push_back(static_cast<int>(k));
        swapped = true;
      }
    if (!swapped) break;
  }
  return word;
}

RMatrix YoungOrthogonalForm::evaluate(const Permutation& sigma) const {
  if (sigma.degree() != shape_.size())
    throw InvalidArgument("permutation degree differs from the partition size");
  RMatrix m = RMatrix::identity(dimension());
  for (int k : adjacent_factorization(sigma)) m = gens_[k] * m;
  return m;
}

MatrixRepresentation sn_irrep(const Partition& mu, int n) {
  if (mu.size() != n)
    throw InvalidArgument("partition " + mu.to_string() + " is not a partition of " + std::to_string(n));
  return sn_irrep(mu);
}

MatrixRepresentation sn_irrep(const Partition& mu) {
  if (mu.empty()) throw InvalidArgument("S_0 has no irreducible representations here");
  auto yor = std::make_shared<const YoungOrthogonalForm>(mu);
  return MatrixRepresentation(GroupContext::symmetric(mu.size()), yor->dimension(), mu.to_string(),
                              Origin::SnIrrep, [yor](const groups::WreathElement& x) {
                                return to_complex(yor->evaluate(x.perm));
                              });
}

RMatrix zero_sum_basis(int n) {
  if (n < 2) throw InvalidArgument("the zero-sum subspace needs n ≥ 2");
  RMatrix u(n, n - 1);
  for (int k = 1; k < n; ++k) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    for (int i = 0; i < k; ++i) u(i, k - 1) = scale;
    u(k, k - 1) = -k * scale;
  }
  return u;
}

MatrixRepresentation std_rep(int n) {
  auto u = std::make_shared<const RMatrix>(zero_sum_basis(n));
  return MatrixRepresentation(
      GroupContext::symmetric(n), n - 1, "std", Origin::Standard,
      [u, n](const groups::WreathElement& x) {
        // (Uᵀ P_σ U)[a][b] = Σ_i U[σ(i)][a] U[i][b]
        CMatrix m(n - 1, n - 1);
        for (int a = 0; a < n - 1; ++a)
          for (int b = 0; b < n - 1; ++b) {
            double v = 0.0;
            for (int i = 0; i < n; ++i) v += (*u)(x.perm(i), a) * (*u)(i, b);
            m(a, b) = v;
          }
        return m;
      });
}

MatrixRepresentation sn_regular_representation(int n) {
  if (n < 2 || n > 5) throw GuardExceeded("S_n regular representation is limited to 2 ≤ n ≤ 5");
  return regular_representation(GroupContext::symmetric(n), 120);
}

}  // namespace wreathgap::reps
