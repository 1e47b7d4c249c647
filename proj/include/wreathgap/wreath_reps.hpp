#pragma once
// Irreducible W_n representations ρ_μ⃗ = Ind_{W_m⃗}^{W_n}(ϱ ⊗ τ̃_μ⃗), built from
// multi-partitions, and G^n-isotypic projectors.
//
// Basis of ρ_μ⃗: transversal-major, then V_ϑ ⊗ V_τ with tensor slot 0 most
// significant. V_ϑ has one slot per coordinate of [n]; V_τ one slot per
// support block.

#include <map>
#include <optional>
#include <vector>

#include "wreathgap/combinatorics.hpp"
#include "wreathgap/representation.hpp"

namespace wreathgap::reps {

/// Young subgroup S_m⃗ = S_{1..m₁} × S_{m₁+1..m₁+m₂} × … and a transversal of
/// its left cosets.
struct YoungSubgroupContext {
  int n = 0;
  std::vector<int> m_vec;
  std::vector<std::pair<int, int>> block_ranges;  // 0-based [begin, end)
  std::vector<int> block_of;                       // coordinate → block
  std::vector<groups::Permutation> transversal;    // sorted, identity first

  /// Coset key of t·S_m⃗: key[t(s)] = block_of[s].
  std::vector<int> coset_key(const groups::Permutation& t) const;
  /// Index into transversal of the coset containing p.
  std::size_t coset_index(const groups::Permutation& p) const;
  bool in_young_subgroup(const groups::Permutation& p) const;

  std::map<std::vector<int>, std::size_t> key_index;
};

/// One lexicographically minimal representative per left coset.
YoungSubgroupContext coset_transversal(int n, const std::vector<int>& m_vec);

struct Factorization {
  std::size_t t_prime = 0;  // index into ctx.transversal
  groups::WreathElement w_prime;
};

/// w·t = t'·w' with t' in the transversal and w' ∈ W_m⃗:
/// t' represents σt·S_m⃗ and w' = (g∘t'; t'⁻¹σt).
Factorization factorize_through_transversal(const groups::FiniteGroupTable& g,
                                            const groups::WreathElement& w,
                                            const groups::Permutation& t,
                                            const YoungSubgroupContext& ctx);

struct WreathIrrep {
  combinatorics::MultiPartition mu;
  MatrixRepresentation rep;
  std::vector<std::size_t> support_order;    // G-irrep of each block
  std::vector<std::size_t> theta_signature;  // G-irrep of each coordinate of ϑ
  bool is_lift = false;                      // supported on triv_G only
  bool is_trivial = false;
};

/// ρ_μ⃗. support_order overrides the ascending order of supp(μ⃗); it must be a
/// permutation of the support.
WreathIrrep build_wreath_irrep(groups::GroupPtr g, const combinatorics::MultiPartition& mu,
                               std::optional<std::vector<std::size_t>> support_order = {});

/// Dimension from the closed formula, without building the representation.
std::uint64_t wreath_irrep_dimension(const groups::FiniteGroupTable& g,
                                     const combinatorics::MultiPartition& mu);

/// Every ρ_μ⃗ for |μ⃗| = n, in enumerate_multipartitions order. Throws
/// GuardExceeded when |G|ⁿ·n! > 10⁴ unless guard_override is set.
std::vector<WreathIrrep> enumerate_wn_irreps(groups::GroupPtr g, int n, bool guard_override = false);

inline constexpr std::uint64_t kIrrepEnumerationGuard = 10000;

/// P_θ = (dim θ / |G|ⁿ) Σ_{g∈Gⁿ} conj(χ_θ(g)) ρ((g; e)) for θ = θ_1 ⊠ … ⊠ θ_n
/// given as G-irrep indices per coordinate. Direct sum when |G|ⁿ ≤ 10⁶,
/// otherwise the product of per-coordinate projectors.
CMatrix gn_isotypic_projector(const MatrixRepresentation& rho, const std::vector<std::size_t>& theta);
CMatrix gn_isotypic_projector_factored(const MatrixRepresentation& rho,
                                       const std::vector<std::size_t>& theta);

/// P_θ for every θ in all_gn_labels order, from a single pass over Gⁿ
/// (falls back to the factored form above 10⁶ elements). Results are
/// memoized on ρ under the same keys as gn_isotypic_projector.
std::vector<CMatrix> gn_isotypic_projectors(const MatrixRepresentation& rho);

/// All θ ∈ Irr(G)ⁿ in odometer order (coordinate 0 fastest).
std::vector<std::vector<std::size_t>> all_gn_labels(const groups::FiniteGroupTable& g, int n);

}  // namespace wreathgap::reps
