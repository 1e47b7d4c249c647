#include "wreathgap/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "wreathgap/sn_reps.hpp"

namespace wreathgap::verify {

using spectral::CatalogEntry;
using spectral::Flavor;
using spectral::IrrepCatalog;

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "unknown";
}

Status combine(const std::vector<SubCheck>& parts) {
  bool any_pass = false;
  for (const auto& p : parts) {
    if (p.status == Status::Fail) return Status::Fail;
    any_pass = any_pass || p.status == Status::Pass;
  }
  return any_pass ? Status::Pass : Status::Skipped;
}

Workspace::Workspace(WorkspaceOptions options) : options_(options) {}

std::string Workspace::key(const groups::GroupPtr& g, int n) const {
  return g->name() + "@" + std::to_string(reinterpret_cast<std::uintptr_t>(g.get())) + "/" +
         std::to_string(n);
}

const IrrepCatalog& Workspace::symmetric(int n) {
  std::lock_guard lock(mu_);
  auto& slot = symmetric_[n];
  if (!slot) slot = IrrepCatalog::symmetric(n);
  return *slot;
}

const IrrepCatalog& Workspace::wreath(const groups::GroupPtr& g, int n) {
  std::lock_guard lock(mu_);
  auto& slot = wreath_[key(g, n)];
  if (!slot) slot = IrrepCatalog::wreath(g, n, options_.guard_override);
  return *slot;
}

const spectral::CayleyTable& Workspace::cayley(const groups::GroupPtr& g, int n) {
  std::lock_guard lock(mu_);
  auto& slot = cayley_[key(g, n)];
  if (!slot) slot = std::make_shared<spectral::CayleyTable>(g, n, options_.max_order);
  return *slot;
}

const reps::MatrixRepresentation& Workspace::standard(int n) {
  std::lock_guard lock(mu_);
  auto& slot = standard_[n];
  if (!slot) slot = std::make_shared<reps::MatrixRepresentation>(reps::std_rep(n));
  return *slot;
}

const reps::MatrixRepresentation& Workspace::lifted(const groups::GroupPtr& g,
                                                    const combinatorics::Partition& mu) {
  std::lock_guard lock(mu_);
  auto& slot = lifted_[key(g, mu.size()) + mu.to_string()];
  if (!slot)
    slot = std::make_shared<reps::MatrixRepresentation>(reps::lift_representation(reps::sn_irrep(mu), g));
  return *slot;
}

namespace {

using Clock = std::chrono::steady_clock;

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * (1.0 + std::abs(a)); }

SubCheck equality_part(std::string name, double a, double b, double tol) {
  SubCheck p{std::move(name), Status::Pass, std::abs(a - b), tol * (1.0 + std::abs(a)), ""};
  p.status = close(a, b, tol) ? Status::Pass : Status::Fail;
  return p;
}

SubCheck bound_part(std::string name, double value, double bound) {
  return {std::move(name), value <= bound ? Status::Pass : Status::Fail, value, bound, ""};
}

std::string vertex_list(const std::vector<int>& vs) {
  std::string s;
  for (int v : vs) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

void finish(CheckResult& r, Clock::time_point start) {
  if (!r.parts.empty()) r.status = combine(r.parts);
  if (r.status == Status::Fail && r.reason.empty()) {
    for (const auto& p : r.parts)
      if (p.status == Status::Fail) {
        r.reason = p.name + " failed";
        break;
      }
  }
  r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
}

double lambda_min(const reps::MatrixRepresentation& rho, const WeightedHypergraph& h, Flavor f) {
  return spectral::spectral_report(rho, h, f).lambda_min;
}

void require_degree(const groups::GroupPtr& g, const WeightedHypergraph& h) {
  if (!g) throw InvalidArgument("a base group is required");
  if (h.n() < 2) throw InvalidArgument("hypergraphs need n ≥ 2");
}

}  // namespace

CheckResult check_main_theorem(Workspace& ws, const groups::GroupPtr& g, const WeightedHypergraph& h,
                               double tol) {
  require_degree(g, h);
  const auto start = Clock::now();
  CheckResult r;
  r.check = "main";
  r.tolerance = tol;
  const auto& wcat = ws.wreath(g, h.n());
  const auto& scat = ws.symmetric(h.n());
  const auto lw = spectral::lambda_min_star_regular(wcat, h, tol);
  const auto ls = spectral::lambda_min_star_regular(scat, h, tol);
  if (!lw.value || !ls.value) {
    r.status = Status::Skipped;
    r.reason = "only the trivial representation is present";
    finish(r, start);
    return r;
  }
  r.lhs = *lw.value;
  r.rhs = *ls.value;
  r.margin = std::abs(*lw.value - *ls.value);
  r.witnesses = lw.witnesses;
  r.parts.push_back(equality_part("equality", *lw.value, *ls.value, tol));

  const auto profile = hypergraph::degree_profile(h);
  SubCheck strict{"strict_nonlift", Status::Skipped, {}, {}, ""};
  std::optional<double> nonlift_min;
  for (const auto& rep : lw.reports)
    if (!rep.is_lift && (!nonlift_min || rep.lambda_min < *nonlift_min)) nonlift_min = rep.lambda_min;
  if (!profile.almost_isolated.empty()) {
    strict.note = "almost-isolated vertex " + vertex_list(profile.almost_isolated);
  } else if (!nonlift_min) {
    strict.note = "no non-lift irreps";
  } else {
    strict.value = *nonlift_min - *lw.value;
    strict.bound = 10.0 * tol;
    strict.status = *strict.value > *strict.bound ? Status::Pass : Status::Fail;
  }
  r.parts.push_back(strict);
  finish(r, start);
  return r;
}

CheckResult check_prop_star(Workspace& ws, const WeightedHypergraph& h, double tol,
                            const std::vector<groups::GroupPtr>& lift_groups) {
  const auto start = Clock::now();
  const int n = h.n();
  CheckResult r;
  r.check = "star";
  r.tolerance = tol;
  const double lam = lambda_min(ws.standard(n), h, Flavor::Symmetric);
  const auto profile = hypergraph::degree_profile(h);
  r.lhs = lam;
  r.rhs = profile.min_degree;
  r.margin = profile.min_degree - lam;
  r.parts.push_back(bound_part("bound", lam, profile.min_degree + tol));

  SubCheck strict{"strict", Status::Skipped, *r.margin, 10.0 * tol, ""};
  if (!profile.almost_isolated.empty()) {
    strict.note = "almost-isolated vertex " + vertex_list(profile.almost_isolated);
  } else {
    strict.status = *r.margin > 10.0 * tol ? Status::Pass : Status::Fail;
    if (*r.margin < 1e-6) strict.note = "near equality";
  }
  r.parts.push_back(strict);

  const combinatorics::Partition hook({n - 1, 1});
  const double yor = lambda_min(ws.symmetric(n).find(hook.to_string()).rep, h, Flavor::Symmetric);
  r.parts.push_back(equality_part("std_vs_young", lam, yor, tol));
  for (const auto& g : lift_groups)
    r.parts.push_back(equality_part("lift:" + g->name(), yor, lambda_min(ws.lifted(g, hook), h, Flavor::Wreath), tol));
  finish(r, start);
  return r;
}

CheckResult check_prop_gap(Workspace& ws, const groups::GroupPtr& g, const WeightedHypergraph& h, double tol) {
  require_degree(g, h);
  const auto start = Clock::now();
  CheckResult r;
  r.check = "gap";
  r.tolerance = tol;
  const auto& cat = ws.wreath(g, h.n());
  const auto profile = hypergraph::degree_profile(h);
  r.rhs = profile.min_degree;
  std::optional<double> best;
  std::string best_label;
  for (const auto& e : cat.entries()) {
    if (e.is_lift) continue;
    const double v = lambda_min(e.rep, h, Flavor::Wreath);
    if (!best || v < *best) {
      best = v;
      best_label = e.label;
    }
  }
  if (!best) {
    r.parts.push_back({"nonlift_bound", Status::Pass, {}, profile.min_degree, "vacuous: no non-lift irreps"});
  } else {
    r.lhs = *best;
    r.margin = *best - profile.min_degree;
    r.witnesses = {best_label};
    r.parts.push_back({"nonlift_bound", *best >= profile.min_degree - tol ? Status::Pass : Status::Fail,
                       *best, profile.min_degree - tol, ""});
  }
  finish(r, start);
  return r;
}

CheckResult brute_force_oracle(Workspace& ws, const groups::GroupPtr& g, const WeightedHypergraph& h,
                               double tol) {
  const auto start = Clock::now();
  const int n = h.n();
  CheckResult r;
  r.check = "oracle";
  r.tolerance = tol;
  const groups::GroupPtr base = g ? g : groups::builtin_group("C1");
  const auto& cayley = ws.cayley(base, n);
  const IrrepCatalog& cat = g ? ws.wreath(g, n) : ws.symmetric(n);
  const Flavor flavor = cat.flavor();

  const RMatrix lreg = spectral::regular_laplacian(cayley, h, flavor);
  double trace = 0.0;
  for (std::size_t i = 0; i < lreg.rows(); ++i) trace += lreg(i, i);
  const std::vector<double> direct = spectral::symmetric_eigenvalues(lreg);

  std::vector<double> predicted;
  for (const auto& e : cat.entries()) {
    const auto rep = spectral::spectral_report(e.rep, h, flavor);
    for (std::size_t k = 0; k < e.rep.dimension(); ++k)
      predicted.insert(predicted.end(), rep.eigenvalues.begin(), rep.eigenvalues.end());
  }
  std::sort(predicted.begin(), predicted.end());

  double norm = 0.0;
  for (double v : direct) norm = std::max(norm, std::abs(v));
  const double bound = tol * (1.0 + norm);
  SubCheck multiset{"multiset", Status::Pass, 0.0, bound, ""};
  if (predicted.size() != direct.size()) {
    multiset.status = Status::Fail;
    multiset.note = "dimension mismatch: " + std::to_string(predicted.size()) + " vs " +
                    std::to_string(direct.size());
  } else {
    double worst = 0.0;
    for (std::size_t i = 0; i < direct.size(); ++i) worst = std::max(worst, std::abs(direct[i] - predicted[i]));
    multiset.value = worst;
    multiset.status = worst <= bound ? Status::Pass : Status::Fail;
  }
  r.lhs = multiset.value;
  r.rhs = bound;
  r.parts.push_back(multiset);

  double expected_trace = 0.0;
  const auto kind = flavor == Flavor::Symmetric ? groups::SubgroupKind::Symmetric : groups::SubgroupKind::Wreath;
  for (const auto& [b, c] : h.edges())
    expected_trace += c * (1.0 - 1.0 / static_cast<double>(groups::subgroup_order(kind, set_size(b), base->order())));
  expected_trace *= static_cast<double>(cayley.order());
  r.parts.push_back(equality_part("trace", trace, expected_trace, tol));
  finish(r, start);
  return r;
}

CheckResult check_caputo_instances(Workspace& ws, const groups::GroupPtr& g, const WeightedHypergraph& h,
                                   hypergraph::CaputoClass cls, double tol) {
  require_degree(g, h);
  if (!hypergraph::in_class(h, cls))
    throw InvalidArgument("hypergraph is not in the " + hypergraph::caputo_class_name(cls) + " class");
  const auto start = Clock::now();
  CheckResult r;
  r.check = "caputo";
  r.tolerance = tol;
  r.reason = "";
  const auto lw = spectral::lambda_min_star_regular(ws.wreath(g, h.n()), h, tol);
  const auto ls = spectral::lambda_min_star_regular(ws.symmetric(h.n()), h, tol);
  const double lstd = lambda_min(ws.standard(h.n()), h, Flavor::Symmetric);
  r.lhs = *lw.value;
  r.rhs = lstd;
  r.margin = std::max(std::abs(*lw.value - *ls.value), std::abs(*ls.value - lstd));
  r.witnesses = lw.witnesses;
  r.parts.push_back(equality_part("wreath_eq_symmetric", *lw.value, *ls.value, tol));
  r.parts.push_back(equality_part("symmetric_eq_std", *ls.value, lstd, tol));
  r.parts.back().note = "class " + hypergraph::caputo_class_name(cls);
  finish(r, start);
  return r;
}

bool in_tuple_family(const CatalogEntry& e, int n) {
  if (e.is_trivial) return false;
  const auto& mu = e.mu;
  if (mu.num_slots() == 0) return false;
  if (mu[0] == combinatorics::Partition({n - 1, 1})) return true;
  if (n >= 2 && mu[0] == combinatorics::Partition({n - 1})) {
    int singles = 0;
    for (std::size_t t = 1; t < mu.num_slots(); ++t)
      if (mu[t] == combinatorics::Partition({1})) ++singles;
    return singles == 1;
  }
  return false;
}

CheckResult check_remark_tuples(Workspace& ws, const groups::GroupPtr& g, const WeightedHypergraph& h,
                                double tol) {
  require_degree(g, h);
  if (!hypergraph::is_tuples(h)) throw InvalidArgument("hypergraph is not supported on |B| ≥ n−1");
  const auto start = Clock::now();
  const int n = h.n();
  CheckResult r;
  r.check = "tuples";
  r.tolerance = tol;
  double flat = 0.0;
  for (VertexSet b : h.support()) flat += h.weight(b);
  r.rhs = flat;

  const auto& cat = ws.wreath(g, n);
  const auto star = spectral::lambda_min_star_regular(cat, h, tol);
  SubCheck flat_part{"flat_outside_family", Status::Skipped, {}, tol * (1.0 + flat), "no irreps outside the family"};
  bool family_attains = false;
  double worst = 0.0;
  for (std::size_t i = 0; i < cat.entries().size(); ++i) {
    const auto& e = cat.entries()[i];
    const auto& rep = star.reports[i];
    if (e.is_trivial) continue;
    if (in_tuple_family(e, n)) {
      if (star.value && close(rep.lambda_min, *star.value, tol)) family_attains = true;
      continue;
    }
    r.witnesses.push_back(e.label);
    for (double v : rep.eigenvalues) worst = std::max(worst, std::abs(v - flat));
    flat_part.status = Status::Pass;
    flat_part.note.clear();
  }
  if (flat_part.status != Status::Skipped) {
    flat_part.value = worst;
    flat_part.status = worst <= *flat_part.bound ? Status::Pass : Status::Fail;
  }
  r.lhs = star.value;
  r.margin = worst;
  r.parts.push_back(flat_part);
  r.parts.push_back({"family_attains_min", family_attains ? Status::Pass : Status::Fail, star.value, {}, ""});
  finish(r, start);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

double projector_defect(const CMatrix& p) {
  return std::max(max_abs_diff(p * p, p), hermitian_defect(p));
}

double commutator(const CMatrix& a, const CMatrix& b) { return max_abs_diff(a * b, b * a); }

struct Worst {
  double value = 0.0;
  std::string where;
  void update(double v, const std::string& w) {
    if (where.empty() || v > value) {
      value = v;
      where = w;
    }
  }
};

SubCheck worst_part(std::string name, const Worst& w, double bound) {
  SubCheck p{std::move(name), w.value <= bound ? Status::Pass : Status::Fail, w.value, bound, w.where};
  return p;
}

}  // namespace

CheckResult check_structural(Workspace& ws, const groups::GroupPtr& g, const WeightedHypergraph& h, double tol,
                             std::uint64_t seed) {
  require_degree(g, h);
  const auto start = Clock::now();
  const int n = h.n();
  CheckResult r;
  r.check = "structural";
  r.tolerance = tol;
  const auto& wcat = ws.wreath(g, n);
  const auto& scat = ws.symmetric(n);
  const auto support = h.support();
  constexpr double kLaw = 1e-9;

  Worst proj, psd, comm, lift, block, jlaw, complete;
  std::size_t disjoint_cases = 0, meeting_cases = 0;

  // Projector laws in both flavors on W_n irreps, and on S_n irreps.
  for (const auto& e : wcat.entries())
    for (VertexSet b : support)
      for (Flavor f : {Flavor::Symmetric, Flavor::Wreath})
        proj.update(projector_defect(spectral::averaging_projector(e.rep, b, f)),
                    e.label + " " + set_to_string(b) + " " + spectral::flavor_name(f));
  for (const auto& e : scat.entries())
    for (VertexSet b : support)
      proj.update(projector_defect(spectral::averaging_projector(e.rep, b, Flavor::Symmetric)),
                  e.label + " " + set_to_string(b));

  // PSD, scaled by 1 + ‖𝓛‖.
  auto psd_update = [&](const reps::MatrixRepresentation& rho, Flavor f, const std::string& label) {
    const auto ev = spectral::hermitian_eigenvalues(spectral::laplacian_matrix(rho, h, f));
    const double scale = 1.0 + std::max(std::abs(ev.front()), std::abs(ev.back()));
    psd.update(std::max(0.0, -ev.front()) / scale, label);
  };
  for (const auto& e : wcat.entries()) psd_update(e.rep, Flavor::Wreath, e.label);
  for (const auto& e : scat.entries()) psd_update(e.rep, Flavor::Symmetric, e.label);

  // G^n-commutation with 100 random base elements per irrep.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::vector<int>> samples(100, std::vector<int>(n));
  for (auto& s : samples)
    for (int& x : s) x = static_cast<int>(rng() % static_cast<std::uint64_t>(g->order()));
  for (const auto& e : wcat.entries()) {
    std::vector<CMatrix> images;
    for (const auto& s : samples) images.push_back(e.rep.evaluate(groups::embed_base(s)));
    for (VertexSet b : support) {
      const CMatrix j = spectral::averaging_projector(e.rep, b, Flavor::Wreath);
      for (const auto& a : images) comm.update(commutator(j, a), e.label + " " + set_to_string(b));
    }
  }

  // τ_μ(𝓛_Γ) = τ̃_μ(𝓛_Γ^(G)) entrywise.
  for (const auto& e : scat.entries()) {
    const CMatrix ls = spectral::laplacian_matrix(e.rep, h, Flavor::Symmetric);
    const CMatrix lw = spectral::laplacian_matrix(ws.lifted(g, e.partition), h, Flavor::Wreath);
    lift.update(max_abs_diff(ls, lw), e.label);
  }

  // Isotypic blocks of every irrep: completeness, invariance, and the J law.
  const auto labels = reps::all_gn_labels(*g, n);
  for (const auto& e : wcat.entries()) {
    const auto projectors = reps::gn_isotypic_projectors(e.rep);
    const CMatrix lap = spectral::laplacian_matrix(e.rep, h, Flavor::Wreath);
    CMatrix sum(e.rep.dimension(), e.rep.dimension());
    for (std::size_t l = 0; l < labels.size(); ++l) {
      const CMatrix& p = projectors[l];
      sum += p;
      if (max_abs(p) < 1e-6) continue;
      std::string tag = e.label + " θ=";
      VertexSet theta_support = 0;
      for (int t = 0; t < n; ++t) {
        tag += std::to_string(labels[l][t]);
        if (labels[l][t] != 0) theta_support |= 1u << t;
      }
      if (!e.is_lift) block.update(commutator(p, lap), tag);
      for (VertexSet b : support) {
        const CMatrix jg = spectral::averaging_projector(e.rep, b, Flavor::Wreath) * p;
        if ((b & theta_support) == 0) {
          ++disjoint_cases;
          jlaw.update(max_abs_diff(jg, spectral::averaging_projector(e.rep, b, Flavor::Symmetric) * p),
                      tag + " " + set_to_string(b));
        } else {
          ++meeting_cases;
          jlaw.update(max_abs(jg), tag + " " + set_to_string(b));
        }
      }
    }
    complete.update(max_abs_diff(sum, CMatrix::identity(e.rep.dimension())), e.label);
  }

  r.parts.push_back(worst_part("projector", proj, kLaw));
  r.parts.push_back(worst_part("psd", psd, kLaw));
  r.parts.push_back(worst_part("gn_commutation", comm, kLaw));
  r.parts.push_back(worst_part("lift_equality", lift, 1e-10));
  r.parts.push_back(worst_part("isotypic_completeness", complete, kLaw));
  r.parts.push_back(worst_part("block_invariance", block, kLaw));
  r.parts.push_back(worst_part("j_law", jlaw, kLaw));
  r.parts.back().note = "disjoint=" + std::to_string(disjoint_cases) + " meeting=" + std::to_string(meeting_cases);
  if (support.empty())
    for (auto& p : r.parts)
      if (p.name == "projector" || p.name == "gn_commutation" || p.name == "j_law") {
        p.status = Status::Skipped;
        p.note = "empty support";
      }
  double worst = 0.0;
  for (const auto& p : r.parts)
    if (p.value) worst = std::max(worst, *p.value);
  r.lhs = worst;
  finish(r, start);
  return r;
}

CheckResult check_classification(Workspace& ws, const groups::GroupPtr& g, int n) {
  if (!g) throw InvalidArgument("a base group is required");
  const std::string key = ws.key(g, n);
  {
    std::lock_guard lock(ws.mu_);
    if (auto it = ws.classification_.find(key); it != ws.classification_.end()) return it->second;
  }
  const auto start = Clock::now();
  CheckResult r;
  r.check = "classification";
  r.tolerance = 1e-8;
  const auto& cat = ws.wreath(g, n);
  const groups::WreathGroup w(g, n);

  std::uint64_t sum = 0;
  bool dims_ok = true;
  for (const auto& e : cat.entries()) {
    const std::uint64_t d = e.rep.dimension();
    sum += d * d;
    dims_ok = dims_ok && d == reps::wreath_irrep_dimension(*g, e.mu);
  }
  r.lhs = static_cast<double>(sum);
  r.rhs = static_cast<double>(w.order());
  r.parts.push_back({"sum_dim_squared", sum == w.order() ? Status::Pass : Status::Fail, static_cast<double>(sum),
                     static_cast<double>(w.order()), "exact integers"});
  r.parts.push_back({"dimension_formula", dims_ok ? Status::Pass : Status::Fail, {}, {}, ""});
  std::uint64_t sn_sum = 0;
  for (const auto& e : ws.symmetric(n).entries()) sn_sum += e.rep.dimension() * e.rep.dimension();
  r.parts.push_back({"sn_sum_dim_squared", sn_sum == combinatorics::factorial(n) ? Status::Pass : Status::Fail,
                     static_cast<double>(sn_sum), static_cast<double>(combinatorics::factorial(n)), "exact integers"});

  constexpr std::uint64_t kCharacterLimit = 1536;
  if (w.order() > kCharacterLimit) {
    r.parts.push_back({"character_norm", Status::Skipped, {}, {}, "|W_n| above 1536"});
  } else {
    const std::size_t m = cat.entries().size();
    std::vector<std::vector<Complex>> chi(m, std::vector<Complex>(w.order()));
    for (std::size_t i = 0; i < m; ++i)
      for (std::uint64_t x = 0; x < w.order(); ++x) chi[i][x] = trace(cat.entries()[i].rep.evaluate(w.element(x)));
    Worst norm, cross;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) {
        Complex ip = 0.0;
        for (std::uint64_t x = 0; x < w.order(); ++x) ip += chi[i][x] * std::conj(chi[j][x]);
        ip /= static_cast<double>(w.order());
        if (i == j) norm.update(std::abs(ip - 1.0), cat.entries()[i].label);
        else cross.update(std::abs(ip), cat.entries()[i].label + " vs " + cat.entries()[j].label);
      }
    r.parts.push_back(worst_part("character_norm", norm, 1e-8));
    r.parts.push_back(worst_part("character_orthogonality", cross, 1e-8));
    r.margin = norm.value;
  }
  finish(r, start);
  std::lock_guard lock(ws.mu_);
  ws.classification_.emplace(key, r);
  return r;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"main", "star", "gap", "oracle", "caputo",
                                                 "tuples", "structural", "classification"};
  return names;
}

}  // namespace wreathgap::verify
