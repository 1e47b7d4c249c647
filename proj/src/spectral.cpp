#include "wreathgap/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "wreathgap/sn_reps.hpp"

namespace wreathgap::spectral {

using hypergraph::WeightedHypergraph;
using reps::MatrixRepresentation;

std::string flavor_name(Flavor f) { return f == Flavor::Symmetric ? "symmetric" : "wreath"; }

namespace {

groups::SubgroupKind subgroup_kind(Flavor f) {
  return f == Flavor::Symmetric ? groups::SubgroupKind::Symmetric : groups::SubgroupKind::Wreath;
}

void check_subset(const MatrixRepresentation& rho, VertexSet b) {
  if (b & ~full_set(rho.context().n))
    throw InvalidArgument("subset " + set_to_string(b) + " is not contained in [" +
                          std::to_string(rho.context().n) + "]");
}

}  // namespace

CMatrix averaging_projector_from_generators(const MatrixRepresentation& rho, VertexSet b, Flavor flavor) {
  check_subset(rho, b);
  const auto& ctx = rho.context();
  const std::size_t d = rho.dimension();
  const auto gens = groups::subgroup_generators(subgroup_kind(flavor), b, *ctx.base, ctx.n);
  if (gens.empty()) return CMatrix::identity(d);

  CMatrix gram(d, d);
  for (const auto& s : gens) {
    CMatrix m = rho.evaluate(s) - CMatrix::identity(d);
    gram += adjoint(m) * m;
  }
  const EigenSystem es = hermitian_eigensystem(gram);
  const double cutoff = 1e-8 * (1.0 + std::max(0.0, es.values.back()));
  CMatrix p(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    if (es.values[k] > cutoff) break;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) p(i, j) += es.vectors(i, k) * std::conj(es.vectors(j, k));
  }
  return p;
}

CMatrix averaging_projector(const MatrixRepresentation& rho, VertexSet b, Flavor flavor) {
  check_subset(rho, b);
  const auto& ctx = rho.context();
  const std::string key = "J:" + flavor_name(flavor) + ":" + std::to_string(b);
  return rho.cached(key, [&] {
    const auto kind = subgroup_kind(flavor);
    const std::uint64_t order = groups::subgroup_order(kind, set_size(b), ctx.base->order());
    if (order > kDirectAverageLimit) return averaging_projector_from_generators(rho, b, flavor);
    CMatrix p(rho.dimension(), rho.dimension());
    for (const auto& x : groups::subgroup_elements(kind, b, *ctx.base, ctx.n))
      p += rho.evaluate(x);
    p *= Complex(1.0 / static_cast<double>(order));
    return p;
  });
}

CMatrix laplacian_matrix(const MatrixRepresentation& rho, const WeightedHypergraph& h, Flavor flavor) {
  if (h.n() != rho.context().n)
    throw InvalidArgument("hypergraph has " + std::to_string(h.n()) + " vertices but the group acts on " +
                          std::to_string(rho.context().n));
  const std::size_t d = rho.dimension();
  CMatrix l(d, d);
  for (const auto& [b, c] : h.edges()) {
    if (c == 0.0) continue;
    CMatrix term = CMatrix::identity(d) - averaging_projector(rho, b, flavor);
    accumulate(l, Complex(c), term);
  }
  return l;
}

SpectralReport spectral_report(const MatrixRepresentation& rho, const WeightedHypergraph& h, Flavor flavor,
                               bool is_trivial, bool is_lift) {
  SpectralReport r;
  r.label = rho.label();
  r.dimension = rho.dimension();
  r.eigenvalues = hermitian_eigenvalues(laplacian_matrix(rho, h, flavor));
  r.lambda_min = r.eigenvalues.empty() ? 0.0 : r.eigenvalues.front();
  r.is_trivial = is_trivial;
  r.is_lift = is_lift;
  return r;
}

std::shared_ptr<const IrrepCatalog> IrrepCatalog::symmetric(int n) {
  auto cat = std::shared_ptr<IrrepCatalog>(new IrrepCatalog());
  cat->ctx_ = reps::GroupContext::symmetric(n);
  for (const auto& mu : combinatorics::enumerate_partitions(n)) {
    CatalogEntry e{mu.to_string(), reps::sn_irrep(mu), mu.length() == 1, true, {}, mu, {}};
    cat->entries_.push_back(std::move(e));
  }
  return cat;
}

std::shared_ptr<const IrrepCatalog> IrrepCatalog::wreath(groups::GroupPtr g, int n, bool guard_override) {
  auto cat = std::shared_ptr<IrrepCatalog>(new IrrepCatalog());
  cat->ctx_ = reps::GroupContext::wreath(g, n);
  for (auto& w : reps::enumerate_wn_irreps(g, n, guard_override)) {
    CatalogEntry e{w.mu.to_string(), std::move(w.rep), w.is_trivial, w.is_lift, w.mu,
                   w.is_lift ? w.mu[0] : combinatorics::Partition{}, w.theta_signature};
    cat->entries_.push_back(std::move(e));
  }
  return cat;
}

const CatalogEntry& IrrepCatalog::find(const std::string& label) const {
  for (const auto& e : entries_)
    if (e.label == label) return e;
  // Accept a bare partition for S_n written with spaces, or "∅" for empty slots.
  try {
    const std::string canon = ctx_.kind == reps::ContextKind::Symmetric
                                  ? combinatorics::Partition::parse(label).to_string()
                                  : combinatorics::MultiPartition::parse(label).to_string();
    for (const auto& e : entries_)
      if (e.label == canon) return e;
  } catch (const InvalidArgument&) {
  }
  throw InvalidArgument("no irrep labelled " + label + " for " + ctx_.to_string());
}

LambdaStar lambda_min_star_regular(const IrrepCatalog& catalog, const WeightedHypergraph& h, double tol) {
  if (catalog.entries().empty()) throw InvalidArgument("empty irrep list");
  LambdaStar out;
  for (const auto& e : catalog.entries()) {
    out.reports.push_back(spectral_report(e.rep, h, catalog.flavor(), e.is_trivial, e.is_lift));
    const double v = out.reports.back().lambda_min;
    if (!e.is_trivial && (!out.value || v < *out.value)) out.value = v;
  }
  if (out.value)
    for (const auto& r : out.reports)
      if (!r.is_trivial && std::abs(r.lambda_min - *out.value) <= tol * (1.0 + std::abs(*out.value)))
        out.witnesses.push_back(r.label);
  return out;
}

// ---------------------------------------------------------------------------

CayleyTable::CayleyTable(groups::GroupPtr g, int n, std::uint64_t max_order) : group_(g, n) {
  if (group_.order() > max_order)
    throw GuardExceeded("group order " + std::to_string(group_.order()) +
                        " exceeds the dense diagonalization guard " + std::to_string(max_order) +
                        " (set WREATHGAP_MAX_ORDER to raise it)");
  order_ = static_cast<std::size_t>(group_.order());
  const int k = g->order();
  const auto perms = groups::all_permutations(n);
  const std::size_t np = perms.size();
  const std::size_t base = order_ / np;

  std::vector<std::uint32_t> comp(np * np);
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = 0; b < np; ++b)
      comp[a * np + b] = static_cast<std::uint32_t>(groups::lex_rank(groups::compose(perms[a], perms[b])));
  std::vector<std::vector<int>> inverse_images(np);
  for (std::size_t a = 0; a < np; ++a) inverse_images[a] = perms[a].inverse().images();

  std::vector<std::vector<int>> digits(base, std::vector<int>(n));
  for (std::size_t x = 0; x < base; ++x) {
    std::size_t r = x;
    for (int i = 0; i < n; ++i) {
      digits[x][i] = static_cast<int>(r % k);
      r /= k;
    }
  }
  std::vector<std::size_t> pow(n);
  for (int i = 0; i < n; ++i) pow[i] = i == 0 ? 1 : pow[i - 1] * k;

  table_.resize(order_ * order_);
  for (std::size_t x = 0; x < order_; ++x) {
    const std::size_t sx = x / base;
    const auto& gx = digits[x % base];
    const auto& sinv = inverse_images[sx];
    for (std::size_t y = 0; y < order_; ++y) {
      const std::size_t sy = y / base;
      const auto& hy = digits[y % base];
      std::size_t gidx = 0;
      for (int i = 0; i < n; ++i)
        gidx += pow[i] * static_cast<std::size_t>(g->multiply(gx[i], hy[sinv[i]]));
      table_[x * order_ + y] = static_cast<std::uint32_t>(comp[sx * np + sy] * base + gidx);
    }
  }
}

std::vector<std::uint32_t> CayleyTable::element_indices(groups::SubgroupKind kind, VertexSet b) const {
  std::vector<std::uint32_t> out;
  for (const auto& x : groups::subgroup_elements(kind, b, group_.base(), group_.degree()))
    out.push_back(static_cast<std::uint32_t>(group_.index(x)));
  return out;
}

std::uint64_t dense_order_guard() {
  if (const char* env = std::getenv("WREATHGAP_MAX_ORDER")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultMaxOrder;
}

RMatrix regular_laplacian(const CayleyTable& cayley, const WeightedHypergraph& h, Flavor flavor) {
  if (h.n() != cayley.group().degree())
    throw InvalidArgument("hypergraph size does not match the group degree");
  const std::size_t m = cayley.order();
  RMatrix l(m, m);
  const auto kind = subgroup_kind(flavor);
  for (const auto& [b, c] : h.edges()) {
    if (c == 0.0) continue;
    const auto members = cayley.element_indices(kind, b);
    const double share = c / static_cast<double>(members.size());
    for (std::size_t x = 0; x < m; ++x) l(x, x) += c;
    for (std::uint32_t hidx : members)
      for (std::size_t y = 0; y < m; ++y) l(cayley.multiply(hidx, y), y) -= share;
  }
  return l;
}

}  // namespace wreathgap::spectral
