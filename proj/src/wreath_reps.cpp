#include "wreathgap/wreath_reps.hpp"

#include <algorithm>
#include <numeric>

#include "wreathgap/sn_reps.hpp"

namespace wreathgap::reps {

using combinatorics::MultiPartition;
using groups::Permutation;
using groups::WreathElement;

std::vector<int> YoungSubgroupContext::coset_key(const Permutation& t) const {
  std::vector<int> key(n);
  for (int s = 0; s < n; ++s) key[t(s)] = block_of[s];
  return key;
}

std::size_t YoungSubgroupContext::coset_index(const Permutation& p) const {
  return key_index.at(coset_key(p));
}

bool YoungSubgroupContext::in_young_subgroup(const Permutation& p) const {
  for (int s = 0; s < n; ++s)
    if (block_of[p(s)] != block_of[s]) return false;
  return true;
}

YoungSubgroupContext coset_transversal(int n, const std::vector<int>& m_vec) {
  YoungSubgroupContext ctx;
  ctx.n = n;
  ctx.m_vec = m_vec;
  int offset = 0;
  for (std::size_t i = 0; i < m_vec.size(); ++i) {
    if (m_vec[i] < 0) throw InvalidArgument("block sizes must be nonnegative");
    ctx.block_ranges.emplace_back(offset, offset + m_vec[i]);
    for (int s = 0; s < m_vec[i]; ++s) ctx.block_of.push_back(static_cast<int>(i));
    offset += m_vec[i];
  }
  if (offset != n) throw InvalidArgument("block sizes do not sum to n");

  std::vector<int> key = ctx.block_of;
  do {
    // Block i sends its s-th point to the s-th smallest position labelled i.
    std::vector<int> images(n);
    std::vector<int> next(m_vec.size());
    for (std::size_t i = 0; i < m_vec.size(); ++i) next[i] = ctx.block_ranges[i].first;
    for (int pos = 0; pos < n; ++pos) images[next[key[pos]]++] = pos;
    ctx.transversal.emplace_back(std::move(images));
  } while (std::next_permutation(key.begin(), key.end()));
  std::sort(ctx.transversal.begin(), ctx.transversal.end(),
            [](const Permutation& a, const Permutation& b) { return a.images() < b.images(); });
  for (std::size_t i = 0; i < ctx.transversal.size(); ++i)
    ctx.key_index.emplace(ctx.coset_key(ctx.transversal[i]), i);
  return ctx;
}

Factorization factorize_through_transversal(const groups::FiniteGroupTable& g, const WreathElement& w,
                                            const Permutation& t, const YoungSubgroupContext& ctx) {
  (void)g;
  const Permutation st = groups::compose(w.perm, t);
  Factorization f;
  f.t_prime = ctx.coset_index(st);
  const Permutation& tp = ctx.transversal[f.t_prime];
  f.w_prime.perm = groups::compose(tp.inverse(), st);
  f.w_prime.gvec.resize(ctx.n);
  for (int i = 0; i < ctx.n; ++i) f.w_prime.gvec[i] = w.gvec[tp(i)];
  return f;
}

namespace {

// Evaluation data shared by all copies of one ρ_μ⃗.
struct InducedModel {
  groups::GroupPtr g;
  YoungSubgroupContext ctx;
  std::vector<std::size_t> signature;           // G-irrep per coordinate
  std::vector<YoungOrthogonalForm> yor;         // per block
  std::vector<std::size_t> slot_dim;            // V_ϑ slot dimensions
  std::size_t dim_theta = 1, dim_tau = 1, dim_inner = 1, dim = 1;

  CMatrix inner(const WreathElement& wp) const {
    const int n = ctx.n;
    CMatrix theta = CMatrix::identity(1);
    for (int t = 0; t < n; ++t) theta = kron(theta, g->irrep_matrix(signature[t], wp.gvec[t]));

    // ϑ(h)·σ̂(π): column a of σ̂(π) is e_b with b_{π(t)} = a_t.
    CMatrix a_mat(dim_theta, dim_theta);
    std::vector<std::size_t> digits(n), moved(n);
    for (std::size_t a = 0; a < dim_theta; ++a) {
      std::size_t rest = a;
      for (int t = n - 1; t >= 0; --t) {
        digits[t] = rest % slot_dim[t];
        rest /= slot_dim[t];
      }
      for (int t = 0; t < n; ++t) moved[wp.perm(t)] = digits[t];
      std::size_t b = 0;
      for (int t = 0; t < n; ++t) b = b * slot_dim[t] + moved[t];
      for (std::size_t r = 0; r < dim_theta; ++r) a_mat(r, a) = theta(r, b);
    }

    CMatrix tau = CMatrix::identity(1);
    for (std::size_t i = 0; i < yor.size(); ++i) {
      const auto [begin, end] = ctx.block_ranges[i];
      std::vector<int> local(end - begin);
      for (int s = begin; s < end; ++s) local[s - begin] = wp.perm(s) - begin;
      tau = kron(tau, to_complex(yor[i].evaluate(Permutation(std::move(local)))));
    }
    return kron(a_mat, tau);
  }

  CMatrix evaluate(const WreathElement& w) const {
    CMatrix out(dim, dim);
    for (std::size_t j = 0; j < ctx.transversal.size(); ++j) {
      const Factorization f = factorize_through_transversal(*g, w, ctx.transversal[j], ctx);
      const CMatrix block = inner(f.w_prime);
      const std::size_t r0 = f.t_prime * dim_inner, c0 = j * dim_inner;
      for (std::size_t r = 0; r < dim_inner; ++r)
        std::copy(block.row(r), block.row(r) + dim_inner, out.row(r0 + r) + c0);
    }
    return out;
  }
};

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::uint64_t wreath_irrep_dimension(const groups::FiniteGroupTable& g, const MultiPartition& mu) {
  if (mu.num_slots() != g.num_irreps())
    throw InvalidArgument("multi-partition has " + std::to_string(mu.num_slots()) +
                          " slots but the base group has " + std::to_string(g.num_irreps()) +
                          " irreps");
  std::uint64_t dim = combinatorics::factorial(mu.order());
  for (std::size_t theta : mu.support()) {
    const auto& p = mu[theta];
    dim /= combinatorics::factorial(p.size());
    dim *= ipow(static_cast<std::uint64_t>(g.irrep(theta).dim), p.size());
    dim *= combinatorics::tableaux_and_dimension(p).dimension;
  }
  return dim;
}

WreathIrrep build_wreath_irrep(groups::GroupPtr g, const MultiPartition& mu,
                               std::optional<std::vector<std::size_t>> support_order) {
  if (mu.num_slots() != g->num_irreps())
    throw InvalidArgument("multi-partition has " + std::to_string(mu.num_slots()) +
                          " slots but the base group has " + std::to_string(g->num_irreps()) +
                          " irreps");
  const int n = mu.order();
  if (n < 1) throw InvalidArgument("multi-partition of order 0");
  const std::vector<std::size_t> support = mu.support();
  std::vector<std::size_t> order = support_order.value_or(support);
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != support) throw InvalidArgument("support order is not a permutation of the support");
  }

  auto model = std::make_shared<InducedModel>();
  model->g = g;
  std::vector<int> m_vec;
  for (std::size_t theta : order) {
    m_vec.push_back(mu[theta].size());
    model->yor.emplace_back(mu[theta]);
    model->dim_tau *= model->yor.back().dimension();
  }
  model->ctx = coset_transversal(n, m_vec);
  for (int t = 0; t < n; ++t) {
    const std::size_t theta = order[model->ctx.block_of[t]];
    model->signature.push_back(theta);
    model->slot_dim.push_back(static_cast<std::size_t>(g->irrep(theta).dim));
    model->dim_theta *= model->slot_dim.back();
  }
  model->dim_inner = model->dim_theta * model->dim_tau;
  model->dim = model->ctx.transversal.size() * model->dim_inner;

  WreathIrrep out{mu,
                  MatrixRepresentation(GroupContext::wreath(g, n), model->dim, mu.to_string(),
                                       Origin::WreathIrrep,
                                       [model](const WreathElement& w) { return model->evaluate(w); }),
                  order, model->signature, false, false};
  out.is_lift = support.size() == 1 && support[0] == 0;
  out.is_trivial = out.is_lift && mu[0].length() == 1;
  return out;
}

std::vector<WreathIrrep> enumerate_wn_irreps(groups::GroupPtr g, int n, bool guard_override) {
  if (n < 1) throw InvalidArgument("n must be positive");
  const std::uint64_t order = groups::WreathGroup(g, n).order();
  if (order > kIrrepEnumerationGuard && !guard_override)
    throw GuardExceeded("|W_n| = " + std::to_string(order) + " exceeds the irrep enumeration guard " +
                        std::to_string(kIrrepEnumerationGuard) + " (use --guard-override)");
  std::vector<WreathIrrep> out;
  for (const auto& mu : combinatorics::enumerate_multipartitions(static_cast<int>(g->num_irreps()), n))
    out.push_back(build_wreath_irrep(g, mu));
  return out;
}

std::vector<std::vector<std::size_t>> all_gn_labels(const groups::FiniteGroupTable& g, int n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    out.push_back(digits);
    int pos = 0;
    while (pos < n && ++digits[pos] == g.num_irreps()) digits[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

namespace {

std::string label_key(const std::vector<std::size_t>& theta) {
  std::string key = "P_theta:";
  for (std::size_t t : theta) key += std::to_string(t) + ",";
  return key;
}

void check_label(const MatrixRepresentation& rho, const std::vector<std::size_t>& theta) {
  const auto& g = *rho.context().base;
  if (static_cast<int>(theta.size()) != rho.context().n)
    throw InvalidArgument("G^n label has the wrong number of coordinates");
  for (std::size_t t : theta)
    if (t >= g.num_irreps()) throw InvalidArgument("G^n label names a nonexistent G-irrep");
}

CMatrix coordinate_projector(const MatrixRepresentation& rho, int coord, std::size_t theta) {
  const auto& g = *rho.context().base;
  const int n = rho.context().n;
  CMatrix p(rho.dimension(), rho.dimension());
  for (int h = 0; h < g.order(); ++h) {
    std::vector<int> gv(n, g.identity());
    gv[coord] = h;
    accumulate(p, std::conj(g.character(theta, h)), rho.evaluate(groups::embed_base(gv)));
  }
  p *= Complex(static_cast<double>(g.irrep(theta).dim) / g.order());
  return p;
}

}  // namespace

CMatrix gn_isotypic_projector_factored(const MatrixRepresentation& rho,
                                       const std::vector<std::size_t>& theta) {
  check_label(rho, theta);
  CMatrix p = CMatrix::identity(rho.dimension());
  for (int t = 0; t < rho.context().n; ++t) p = p * coordinate_projector(rho, t, theta[t]);
  return p;
}

CMatrix gn_isotypic_projector(const MatrixRepresentation& rho, const std::vector<std::size_t>& theta) {
  check_label(rho, theta);
  const auto& g = *rho.context().base;
  const int n = rho.context().n;
  const std::uint64_t count = ipow(static_cast<std::uint64_t>(g.order()), n);
  if (count > 1000000) return rho.cached(label_key(theta) + "f", [&] {
    return gn_isotypic_projector_factored(rho, theta);
  });
  return rho.cached(label_key(theta), [&] {
    double dim = 1.0;
    for (std::size_t t : theta) dim *= g.irrep(t).dim;
    CMatrix p(rho.dimension(), rho.dimension());
    std::vector<int> gv(n, 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Complex chi = 1.0;
      for (int t = 0; t < n; ++t) chi *= g.character(theta[t], gv[t]);
      if (chi != Complex(0.0)) accumulate(p, std::conj(chi), rho.evaluate(groups::embed_base(gv)));
      int pos = 0;
      while (pos < n && ++gv[pos] == g.order()) gv[pos++] = 0;
    }
    p *= Complex(dim / static_cast<double>(count));
    return p;
  });
}

std::vector<CMatrix> gn_isotypic_projectors(const MatrixRepresentation& rho) {
  const auto& g = *rho.context().base;
  const int n = rho.context().n;
  const auto labels = all_gn_labels(g, n);
  const std::uint64_t count = ipow(static_cast<std::uint64_t>(g.order()), n);
  std::vector<CMatrix> out;
  if (count > 1000000) {
    for (const auto& theta : labels) out.push_back(gn_isotypic_projector(rho, theta));
    return out;
  }
  const std::string done_key = "P_theta:all";
  rho.cached(done_key, [&] {
    const std::size_t d = rho.dimension();
    std::vector<CMatrix> acc(labels.size(), CMatrix(d, d));
    std::vector<int> gv(n, 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      const CMatrix image = rho.evaluate(groups::embed_base(gv));
      for (std::size_t l = 0; l < labels.size(); ++l) {
        Complex chi = 1.0;
        for (int t = 0; t < n; ++t) chi *= g.character(labels[l][t], gv[t]);
        if (chi != Complex(0.0)) accumulate(acc[l], std::conj(chi), image);
      }
      int pos = 0;
      while (pos < n && ++gv[pos] == g.order()) gv[pos++] = 0;
    }
    for (std::size_t l = 0; l < labels.size(); ++l) {
      double dim = 1.0;
      for (std::size_t t : labels[l]) dim *= g.irrep(t).dim;
      acc[l] *= Complex(dim / static_cast<double>(count));
      CMatrix p = std::move(acc[l]);
      rho.cached(label_key(labels[l]), [&] { return p; });
    }
    return CMatrix();
  });
  for (const auto& theta : labels) out.push_back(gn_isotypic_projector(rho, theta));
  return out;
}

}  // namespace wreathgap::reps
