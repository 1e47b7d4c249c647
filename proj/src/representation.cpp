#include "wreathgap/representation.hpp"

namespace wreathgap::reps {

GroupContext GroupContext::symmetric(int n) {
  if (n < 1) throw InvalidArgument("symmetric group degree must be positive");
  return {ContextKind::Symmetric, n, groups::builtin_group("C1")};
}

GroupContext GroupContext::wreath(groups::GroupPtr base, int n) {
  if (n < 1) throw InvalidArgument("wreath product degree must be positive");
  if (!base) throw InvalidArgument("wreath product needs a base group");
  return {ContextKind::Wreath, n, std::move(base)};
}

std::uint64_t GroupContext::order() const { return groups::WreathGroup(base, n).order(); }

std::string GroupContext::to_string() const {
  const std::string sn = "S" + std::to_string(n);
  return kind == ContextKind::Symmetric ? sn : base->name() + "≀" + sn;
}

std::string origin_name(Origin o) {
  switch (o) {
    case Origin::SnIrrep: return "sn_irrep";
    case Origin::WreathIrrep: return "wreath_irrep";
    case Origin::Standard: return "standard";
    case Origin::Regular: return "regular";
    case Origin::Lift: return "lift";
  }
  return "unknown";
}

MatrixRepresentation::MatrixRepresentation(GroupContext ctx, std::size_t dim, std::string label,
                                           Origin origin, Evaluator eval)
    : ctx_(std::move(ctx)),
      dim_(dim),
      label_(std::move(label)),
      origin_(origin),
      eval_(std::move(eval)),
      memo_(std::make_shared<Memo>()) {}

CMatrix MatrixRepresentation::evaluate(const groups::WreathElement& x) const {
  if (x.degree() != ctx_.n || static_cast<int>(x.gvec.size()) != ctx_.n)
    throw InvalidArgument("element degree does not match the representation's group");
  for (int g : x.gvec)
    if (g < 0 || g >= ctx_.base->order())
      throw InvalidArgument("element entry outside the base group of " + ctx_.to_string());
  return eval_(x);
}

CMatrix MatrixRepresentation::evaluate(const groups::Permutation& sigma) const {
  return evaluate(groups::embed_permutation(*ctx_.base, sigma));
}

CMatrix MatrixRepresentation::cached(const std::string& key,
                                     const std::function<CMatrix()>& make) const {
  {
    std::lock_guard lock(memo_->mu);
    if (auto it = memo_->entries.find(key); it != memo_->entries.end()) return it->second;
  }
  CMatrix value = make();
  std::lock_guard lock(memo_->mu);
  return memo_->entries.emplace(key, std::move(value)).first->second;
}

MatrixRepresentation lift_representation(const MatrixRepresentation& tau, groups::GroupPtr base) {
  if (tau.context().kind != ContextKind::Symmetric)
    throw InvalidArgument("only S_n representations can be lifted");
  const int n = tau.context().n;
  auto ctx = GroupContext::wreath(std::move(base), n);
  auto inner = std::make_shared<MatrixRepresentation>(tau);
  return MatrixRepresentation(ctx, tau.dimension(), tau.label(), Origin::Lift,
                              [inner](const groups::WreathElement& x) {
                                return inner->evaluate(x.perm);
                              });
}

MatrixRepresentation regular_representation(const GroupContext& ctx, std::uint64_t max_order) {
  auto w = std::make_shared<groups::WreathGroup>(ctx.base, ctx.n);
  if (w->order() > max_order)
    throw GuardExceeded("regular representation of " + ctx.to_string() + " has dimension " +
                        std::to_string(w->order()) + " above the guard " +
                        std::to_string(max_order));
  const auto dim = static_cast<std::size_t>(w->order());
  return MatrixRepresentation(ctx, dim, "regular", Origin::Regular,
                              [w, dim](const groups::WreathElement& x) {
                                CMatrix m(dim, dim);
                                for (std::uint64_t y = 0; y < dim; ++y) {
                                  const auto xy = groups::wreath_multiply(w->base(), x, w->element(y));
                                  m(w->index(xy), y) = 1.0;
                                }
                                return m;
                              });
}

}  // namespace wreathgap::reps
