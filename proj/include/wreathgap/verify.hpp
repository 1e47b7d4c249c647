#pragma once
// Numerical checks of the spectral identities, the regular-representation
// oracle, and the corpus runner.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wreathgap/hypergraph.hpp"
#include "wreathgap/spectral.hpp"

namespace wreathgap::verify {

enum class Status { Pass, Fail, Skipped };
std::string status_name(Status s);

struct SubCheck {
  std::string name;
  Status status = Status::Pass;
  std::optional<double> value;
  std::optional<double> bound;
  std::string note;
};

struct CheckResult {
  std::string check;
  Status status = Status::Pass;
  std::optional<double> lhs;
  std::optional<double> rhs;
  std::optional<double> margin;
  std::vector<std::string> witnesses;
  double tolerance = 1e-8;
  std::string reason;  // skipped/failed explanation
  std::vector<SubCheck> parts;
  double elapsed_seconds = 0.0;
};

/// Fail if any part failed; Pass if any part passed; Skipped otherwise.
Status combine(const std::vector<SubCheck>& parts);

struct WorkspaceOptions {
  bool guard_override = false;           // irrep enumeration guard
  std::uint64_t max_order = spectral::kDefaultMaxOrder;  // dense oracle guard
};

/// Caches irrep catalogs, Cayley tables and derived representations so that
/// memoized projectors are shared across hypergraphs. Thread-safe.
class Workspace {
public:
  explicit Workspace(WorkspaceOptions options = {});

  const WorkspaceOptions& options() const { return options_; }
  const spectral::IrrepCatalog& symmetric(int n);
  const spectral::IrrepCatalog& wreath(const groups::GroupPtr& g, int n);
  const spectral::CayleyTable& cayley(const groups::GroupPtr& g, int n);
  const reps::MatrixRepresentation& standard(int n);
  /// τ̃_μ = τ_μ∘π over G, shared so its projectors are memoized once.
  const reps::MatrixRepresentation& lifted(const groups::GroupPtr& g, const combinatorics::Partition& mu);

private:
  std::string key(const groups::GroupPtr& g, int n) const;

  WorkspaceOptions options_;
  std::mutex mu_;
  std::map<int, std::shared_ptr<const spectral::IrrepCatalog>> symmetric_;
  std::map<std::string, std::shared_ptr<const spectral::IrrepCatalog>> wreath_;
  std::map<std::string, std::shared_ptr<const spectral::CayleyTable>> cayley_;
  std::map<int, std::shared_ptr<const reps::MatrixRepresentation>> standard_;
  std::map<std::string, std::shared_ptr<const reps::MatrixRepresentation>> lifted_;
  std::map<std::string, CheckResult> classification_;

  friend CheckResult check_classification(Workspace&, const groups::GroupPtr&, int);
};

using hypergraph::WeightedHypergraph;

/// λ*min(Reg W_n) = λ*min(Reg S_n), plus strictness for non-lifts when Γ has
/// no almost-isolated vertex.
CheckResult check_main_theorem(Workspace& ws, const groups::GroupPtr& g, const WeightedHypergraph& h,
                               double tol);
/// λmin(std) ≤ min-degree (strict without almost-isolated vertices), and
/// λmin(τ_{(n−1,1)}) = λmin(τ̃_{(n−1,1)}) for each group in lift_groups.
CheckResult check_prop_star(Workspace& ws, const WeightedHypergraph& h, double tol,
                            const std::vector<groups::GroupPtr>& lift_groups = {});
/// Every non-lift irrep has λmin ≥ min-degree − tol.
CheckResult check_prop_gap(Workspace& ws, const groups::GroupPtr& g, const WeightedHypergraph& h,
                           double tol);
/// Spectrum of the Cayley-built regular Laplacian equals the union of
/// dim(ρ) copies of spec ρ(𝓛); also the trace identity. g null means S_n.
CheckResult brute_force_oracle(Workspace& ws, const groups::GroupPtr& g, const WeightedHypergraph& h,
                               double tol);
/// λ*min(Reg W) = λ*min(Reg S) = λmin(std). Throws InvalidArgument when Γ is
/// not in the class.
CheckResult check_caputo_instances(Workspace& ws, const groups::GroupPtr& g, const WeightedHypergraph& h,
                                   hypergraph::CaputoClass cls, double tol);
/// For Γ supported on |B| ≥ n−1: irreps outside the family have the flat
/// spectrum Σ c_B, and a family member attains λ*min. Throws InvalidArgument
/// when Γ is outside the class.
CheckResult check_remark_tuples(Workspace& ws, const groups::GroupPtr& g, const WeightedHypergraph& h,
                                double tol);
/// Projector laws, PSD, G^n-commutation, lift equality, isotypic block
/// invariance and the two-case J-action law.
CheckResult check_structural(Workspace& ws, const groups::GroupPtr& g, const WeightedHypergraph& h,
                             double tol, std::uint64_t seed);
/// Σ dim² = |G|ⁿ n! (exact) and unit character norms. Cached per (G, n).
CheckResult check_classification(Workspace& ws, const groups::GroupPtr& g, int n);

/// Members of the (n−1)-tuple family: μ⃗(triv) = (n−1,1), or μ⃗(triv) = (n−1)
/// with μ⃗(θ) = (1) for one nontrivial θ.
bool in_tuple_family(const spectral::CatalogEntry& e, int n);

const std::vector<std::string>& check_names();

}  // namespace wreathgap::verify
