#pragma once
// Matrix representations of S_n and W_n = G≀S_n.
//
// Both groups are handled through WreathElement: S_n is W_n over the trivial
// group C1, so a symmetric-group element is (e; σ).

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "wreathgap/groups.hpp"
#include "wreathgap/linalg.hpp"

namespace wreathgap::reps {

enum class ContextKind { Symmetric, Wreath };

struct GroupContext {
  ContextKind kind = ContextKind::Symmetric;
  int n = 0;
  groups::GroupPtr base;  // C1 for the symmetric context

  static GroupContext symmetric(int n);
  static GroupContext wreath(groups::GroupPtr base, int n);

  std::uint64_t order() const;
  /// "S3" or "C2≀S3"
  std::string to_string() const;
};

enum class Origin { SnIrrep, WreathIrrep, Standard, Regular, Lift };

std::string origin_name(Origin o);

class MatrixRepresentation {
public:
  using Evaluator = std::function<CMatrix(const groups::WreathElement&)>;

  MatrixRepresentation(GroupContext ctx, std::size_t dim, std::string label, Origin origin,
                       Evaluator eval);

  const GroupContext& context() const { return ctx_; }
  std::size_t dimension() const { return dim_; }
  const std::string& label() const { return label_; }
  Origin origin() const { return origin_; }

  /// Throws InvalidArgument if x does not belong to the context group.
  CMatrix evaluate(const groups::WreathElement& x) const;
  /// Image of (e; σ).
  CMatrix evaluate(const groups::Permutation& sigma) const;

  /// Memoized derived matrix (projectors and the like), keyed by a caller
  /// string. Safe under concurrent use; copies of a representation share it.
  CMatrix cached(const std::string& key, const std::function<CMatrix()>& make) const;

private:
  struct Memo {
    std::mutex mu;
    std::map<std::string, CMatrix> entries;
  };

  GroupContext ctx_;
  std::size_t dim_;
  std::string label_;
  Origin origin_;
  Evaluator eval_;
  std::shared_ptr<Memo> memo_;
};

/// τ̃ = τ∘π: an S_n representation pulled back along W_n → S_n.
MatrixRepresentation lift_representation(const MatrixRepresentation& tau, groups::GroupPtr base);

/// Left-regular representation of W_n (or S_n for a symmetric context), as
/// permutation matrices on the WreathGroup index order. Throws GuardExceeded
/// above max_order.
MatrixRepresentation regular_representation(const GroupContext& ctx, std::uint64_t max_order);

}  // namespace wreathgap::reps
