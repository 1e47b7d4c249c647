#pragma once
// J_B, J_B^(G) and the hypergraph Laplacians 𝓛_Γ, 𝓛_Γ^(G) in matrix
// representations; λ_min and λ*_min over irrep catalogs; the regular
// representation Laplacian built straight from the Cayley action.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wreathgap/eigensolver.hpp"
#include "wreathgap/hypergraph.hpp"
#include "wreathgap/representation.hpp"
#include "wreathgap/wreath_reps.hpp"

namespace wreathgap::spectral {

/// Symmetric averages over S_B (embedded as (e; σ) in W_n); Wreath over W_B.
enum class Flavor { Symmetric, Wreath };

std::string flavor_name(Flavor f);

/// Subgroup sizes above this use the generator-kernel construction.
inline constexpr std::uint64_t kDirectAverageLimit = 100000;

/// ρ(J_B) or ρ(J_B^(G)): the orthogonal projection onto the subgroup-fixed
/// vectors. Memoized on ρ.
CMatrix averaging_projector(const reps::MatrixRepresentation& rho, VertexSet b, Flavor flavor);
/// Same projector from the joint kernel of ρ(s) − I over subgroup generators.
CMatrix averaging_projector_from_generators(const reps::MatrixRepresentation& rho, VertexSet b,
                                            Flavor flavor);

/// Σ_B c_B (I − ρ(J_B)) with the chosen flavor.
CMatrix laplacian_matrix(const reps::MatrixRepresentation& rho, const hypergraph::WeightedHypergraph& h,
                         Flavor flavor);

struct SpectralReport {
  std::string label;
  std::size_t dimension = 0;
  std::vector<double> eigenvalues;  // ascending
  double lambda_min = 0.0;
  bool is_trivial = false;
  bool is_lift = false;
};

SpectralReport spectral_report(const reps::MatrixRepresentation& rho,
                               const hypergraph::WeightedHypergraph& h, Flavor flavor,
                               bool is_trivial = false, bool is_lift = false);

/// The complete list of irreps of S_n or W_n with the flags the checks need.
struct CatalogEntry {
  std::string label;
  reps::MatrixRepresentation rep;
  bool is_trivial = false;
  bool is_lift = false;                       // always true for S_n
  combinatorics::MultiPartition mu;           // W_n entries
  combinatorics::Partition partition;         // S_n entries, and lifts
  std::vector<std::size_t> theta_signature;   // W_n entries
};

class IrrepCatalog {
public:
  static std::shared_ptr<const IrrepCatalog> symmetric(int n);
  static std::shared_ptr<const IrrepCatalog> wreath(groups::GroupPtr g, int n, bool guard_override);

  const reps::GroupContext& context() const { return ctx_; }
  Flavor flavor() const {
    return ctx_.kind == reps::ContextKind::Symmetric ? Flavor::Symmetric : Flavor::Wreath;
  }
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  /// Throws InvalidArgument for an unknown label.
  const CatalogEntry& find(const std::string& label) const;

private:
  reps::GroupContext ctx_;
  std::vector<CatalogEntry> entries_;
};

struct LambdaStar {
  std::optional<double> value;          // absent: only the trivial irrep
  std::vector<std::string> witnesses;   // irreps attaining the value within tol
  std::vector<SpectralReport> reports;  // one per catalog entry
};

/// min over nontrivial irreps of λ_min(ρ(𝓛)) in the catalog's own flavor.
LambdaStar lambda_min_star_regular(const IrrepCatalog& catalog, const hypergraph::WeightedHypergraph& h,
                                   double tol);

/// Left multiplication on the indexed elements of W_n (S_n for C1).
class CayleyTable {
public:
  CayleyTable(groups::GroupPtr g, int n, std::uint64_t max_order);

  const groups::WreathGroup& group() const { return group_; }
  std::size_t order() const { return order_; }
  std::uint32_t multiply(std::size_t x, std::size_t y) const { return table_[x * order_ + y]; }
  std::vector<std::uint32_t> element_indices(groups::SubgroupKind kind, VertexSet b) const;

private:
  groups::WreathGroup group_;
  std::size_t order_;
  std::vector<std::uint32_t> table_;
};

inline constexpr std::uint64_t kDefaultMaxOrder = 2000;
/// kDefaultMaxOrder, or WREATHGAP_MAX_ORDER when set to a positive integer.
std::uint64_t dense_order_guard();

/// Reg(𝓛)[x][y] = Σ_B c_B (δ_xy − [x y⁻¹ ∈ H_B]/|H_B|) with H_B = S_B or W_B.
RMatrix regular_laplacian(const CayleyTable& cayley, const hypergraph::WeightedHypergraph& h,
                          Flavor flavor);

}  // namespace wreathgap::spectral
