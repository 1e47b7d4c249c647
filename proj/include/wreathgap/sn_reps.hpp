#pragma once
// Irreducible S_n representations in Young's orthogonal form, the standard
// representation on the zero-sum subspace, and the left-regular representation.

#include <vector>

#include "wreathgap/combinatorics.hpp"
#include "wreathgap/representation.hpp"

namespace wreathgap::reps {

/// Real orthogonal matrices of τ_μ on the standard tableaux of μ, in
/// last-letter order. Generator matrices are built once; an arbitrary σ is
/// evaluated by factoring it into adjacent transpositions.
class YoungOrthogonalForm {
public:
  explicit YoungOrthogonalForm(const combinatorics::Partition& shape);

  const combinatorics::Partition& shape() const { return shape_; }
  std::size_t dimension() const { return tableaux_.size(); }
  const std::vector<combinatorics::StandardTableau>& tableaux() const { return tableaux_; }

  /// τ(s_k) for the 0-based adjacent transposition swapping k and k+1.
  const RMatrix& generator(int k) const { return gens_[k]; }
  RMatrix evaluate(const groups::Permutation& sigma) const;

private:
  combinatorics::Partition shape_;
  std::vector<combinatorics::StandardTableau> tableaux_;
  std::vector<RMatrix> gens_;
};

/// Adjacent transpositions (0-based k means s_k = (k k+1)) with
/// σ = s_{i_r} ∘ … ∘ s_{i_1} for the returned list i_1, …, i_r.
std::vector<int> adjacent_factorization(const groups::Permutation& sigma);

/// τ_μ as a representation of S_{|μ|}. Label is the partition, e.g. "(2,1)".
MatrixRepresentation sn_irrep(const combinatorics::Partition& mu, int n);
MatrixRepresentation sn_irrep(const combinatorics::Partition& mu);

/// Orthonormal basis of V = {x : Σ x_i = 0} as the columns of an n×(n−1)
/// matrix (normalized Helmert vectors).
RMatrix zero_sum_basis(int n);

/// The (n−1)-dimensional representation Uᵀ P_σ U on zero_sum_basis(n).
MatrixRepresentation std_rep(int n);

/// Left-regular representation of S_n for 2 ≤ n ≤ 5.
MatrixRepresentation sn_regular_representation(int n);

}  // namespace wreathgap::reps
