// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <map>
#include <string>

#include "support/oracles.hpp"
#include "wreathgap/corpus.hpp"
#include "wreathgap/spectral.hpp"
#include "wreathgap/verify.hpp"
#include "wreathgap/wreath_reps.hpp"

using namespace wreathgap;
using hypergraph::GeneratorKind;
using hypergraph::WeightedHypergraph;
using verify::Status;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * (1.0 + std::abs(a)); }

struct Case {
  std::string group;
  int n;
  GeneratorKind kind;
  std::uint64_t seed;
  groups::GroupPtr g;
  WeightedHypergraph h;
  std::vector<double> reg_w;  // test-side spectra, filled lazily
  std::vector<double> reg_s;
};

std::vector<Case> load_cases() {
  std::vector<Case> out;
  for (const auto& e : verify::default_corpus())
    out.push_back({e.group, e.n, e.hypergraph.generator, e.seed, groups::builtin_group(e.group),
                   verify::resolve_hypergraph(e), {}, {}});
  return out;
}

const std::vector<double>& reg_w(Case& c) {
  if (c.reg_w.empty()) c.reg_w = oracle::sorted_eigenvalues(oracle::regular_laplacian(*c.g, c.n, c.h, true));
  return c.reg_w;
}

const std::vector<double>& reg_s(Case& c) {
  if (c.reg_s.empty())
    c.reg_s = oracle::sorted_eigenvalues(oracle::regular_laplacian(*groups::builtin_group("C1"), c.n, c.h, false));
  return c.reg_s;
}

std::string describe(const Case& c) {
  return c.group + " n=" + std::to_string(c.n) + " " + hypergraph::generator_name(c.kind) + " seed=" +
         std::to_string(c.seed);
}

bool acts_trivially_on_base(const reps::MatrixRepresentation& rho, const groups::FiniteGroupTable& g, int n) {
  for (int gen : g.generators())
    for (int i = 0; i < n; ++i) {
      std::vector<int> gv(n, g.identity());
      gv[i] = gen;
      const CMatrix m = rho.evaluate(groups::embed_base(gv));
      if (max_abs_diff(m, CMatrix::identity(m.rows())) > 1e-12) return false;
    }
  return true;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;
  void fail(const std::string& why) {
    if (pass) first_failure = why;
    pass = false;
  }
};

int report_line(int number, const char* title, const Outcome& o) {
  std::printf("criterion %d %s %s: %s%s%s\n", number, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(),
              o.pass ? "" : "; first failure: ", o.pass ? "" : o.first_failure.c_str());
  std::fflush(stdout);
  return o.pass ? 0 : 1;
}

// ---------------------------------------------------------------------------

Outcome criterion_oracle(std::vector<Case>& cases, verify::Workspace& ws) {
  Outcome o;
  const auto start = Clock::now();
  double worst = 0.0;
  int count = 0;
  for (auto& c : cases) {
    const auto& cat = ws.wreath(c.g, c.n);
    std::vector<double> union_spec;
    for (const auto& e : cat.entries()) {
      const auto ev = spectral::hermitian_eigenvalues(spectral::laplacian_matrix(e.rep, c.h, spectral::Flavor::Wreath));
      for (std::size_t k = 0; k < e.rep.dimension(); ++k) union_spec.insert(union_spec.end(), ev.begin(), ev.end());
    }
    const auto& reg = reg_w(c);
    const double norm = std::max(std::abs(reg.front()), std::abs(reg.back()));
    const double dev = oracle::max_sorted_diff(union_spec, reg);
    worst = std::max(worst, dev / (1.0 + norm));
    if (!(dev <= 1e-8 * (1.0 + norm))) o.fail(describe(c) + " deviation " + std::to_string(dev));
    if (verify::brute_force_oracle(ws, c.g, c.h, 1e-8).status != Status::Pass)
      o.fail(describe(c) + ": library oracle check did not pass");
    ++count;
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 60.0) o.fail("runtime " + std::to_string(elapsed) + " s");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d (G,n,Γ) cases, worst relative deviation %.3g, %.1f s", count, worst, elapsed);
  o.detail = buf;
  return o;
}

Outcome criterion_main(std::vector<Case>& cases, verify::Workspace& ws) {
  Outcome o;
  int triples = 0;
  for (auto& c : cases) {
    const double lw = oracle::lambda_star_from_regular(reg_w(c));
    const double ls = oracle::lambda_star_from_regular(reg_s(c));
    if (!close(lw, ls, 1e-8)) o.fail(describe(c) + " Reg W " + std::to_string(lw) + " vs Reg S " + std::to_string(ls));
    const auto r = verify::check_main_theorem(ws, c.g, c.h, 1e-8);
    if (r.status != Status::Pass) o.fail(describe(c) + ": library main check " + verify::status_name(r.status));
    if (!r.lhs || !close(*r.lhs, lw, 1e-8)) o.fail(describe(c) + ": library λ* disagrees with the oracle");
    ++triples;
  }
  if (triples < 50) o.fail("only " + std::to_string(triples) + " triples");

  // Anchors: K3 gives 3/2 for n = 3, a single edge gives 1 for n = 2.
  WeightedHypergraph k3(3);
  for (auto b : {0b011u, 0b101u, 0b110u}) k3.add_edge(b, 1.0);
  WeightedHypergraph edge(2);
  edge.add_edge(0b11u, 1.0);
  int anchors = 0;
  for (const char* name : {"C2", "C3", "S3"}) {
    const auto g = groups::builtin_group(name);
    for (const auto& [h, want] : {std::pair{k3, 1.5}, std::pair{edge, 1.0}}) {
      const double lw = oracle::lambda_star_from_regular(
          oracle::sorted_eigenvalues(oracle::regular_laplacian(*g, h.n(), h, true)));
      const auto r = verify::check_main_theorem(ws, g, h, 1e-8);
      if (!close(lw, want, 1e-8) || !r.lhs || !close(*r.lhs, want, 1e-8) || r.status != Status::Pass)
        o.fail(std::string(name) + " anchor n=" + std::to_string(h.n()) + " expected " + std::to_string(want));
      ++anchors;
    }
  }
  o.detail = std::to_string(triples) + " triples equal within 1e-8, " + std::to_string(anchors) +
             " anchors (K3 → 3/2, single edge → 1)";
  return o;
}

Outcome criterion_star(std::vector<Case>& cases, verify::Workspace& ws) {
  Outcome o;
  int strict = 0, degenerate = 0;
  double smallest_margin = INFINITY;
  for (auto& c : cases) {
    const double lam = oracle::std_lambda_min(c.h);
    const double md = oracle::min_degree(c.h);
    if (!(lam <= md + 1e-8)) o.fail(describe(c) + " λ(std) above min-degree");
    if (oracle::has_almost_isolated(c.h)) {
      ++degenerate;
    } else {
      ++strict;
      smallest_margin = std::min(smallest_margin, md - lam);
      if (!(md - lam > 1e-7)) o.fail(describe(c) + " margin " + std::to_string(md - lam));
    }
    const auto r = verify::check_prop_star(ws, c.h, 1e-8, {c.g});
    if (r.status != Status::Pass) o.fail(describe(c) + ": library star check " + verify::status_name(r.status));
  }
  // K3: 3/2 against 2.
  WeightedHypergraph k3(3);
  for (auto b : {0b011u, 0b101u, 0b110u}) k3.add_edge(b, 1.0);
  if (!close(oracle::std_lambda_min(k3), 1.5, 1e-10) || oracle::min_degree(k3) != 2.0) o.fail("K3 anchor");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu hypergraphs, %d strict cases (smallest margin %.3g), %d with an almost-isolated vertex",
                cases.size(), strict, smallest_margin, degenerate);
  o.detail = buf;
  return o;
}

Outcome criterion_gap(std::vector<Case>& cases, verify::Workspace& ws) {
  Outcome o;
  int checked = 0;
  double worst = INFINITY;
  for (auto& c : cases) {
    const double md = oracle::min_degree(c.h);
    for (const auto& e : ws.wreath(c.g, c.n).entries()) {
      const bool lift = acts_trivially_on_base(e.rep, *c.g, c.n);
      if (lift != e.is_lift) o.fail(describe(c) + " " + e.label + ": lift flag disagrees with the base action");
      if (lift) continue;
      const double lam = oracle::sorted_eigenvalues(spectral::laplacian_matrix(e.rep, c.h, spectral::Flavor::Wreath)).front();
      worst = std::min(worst, lam - md);
      if (!(lam >= md - 1e-8)) o.fail(describe(c) + " " + e.label + " λmin " + std::to_string(lam));
      ++checked;
    }
    const auto r = verify::check_prop_gap(ws, c.g, c.h, 1e-8);
    if (r.status != Status::Pass) o.fail(describe(c) + ": library gap check " + verify::status_name(r.status));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d non-lift spectra, min over all of λmin − min-degree = %.3g", checked, worst);
  o.detail = buf;
  return o;
}

Outcome criterion_structural(std::vector<Case>& cases, verify::Workspace& ws) {
  Outcome o;
  std::map<std::string, int> passed;
  for (auto& c : cases) {
    const auto r = verify::check_structural(ws, c.g, c.h, 1e-8, c.seed);
    for (const auto& p : r.parts) {
      if (p.status == Status::Fail) o.fail(describe(c) + " " + p.name + " " + p.note);
      if (p.status == Status::Pass) ++passed[p.name];
    }
    if (r.status == Status::Fail) o.fail(describe(c));
  }
  for (const char* part : {"projector", "psd", "gn_commutation", "lift_equality", "isotypic_completeness",
                           "block_invariance", "j_law"})
    if (passed[part] == 0) o.fail(std::string(part) + " never ran");
  std::string d = std::to_string(cases.size()) + " hypergraphs, parts passed:";
  for (const auto& [k, v] : passed) d += " " + k + "=" + std::to_string(v);
  o.detail = d;
  return o;
}

Outcome criterion_classification(verify::Workspace& ws) {
  Outcome o;
  int pairs = 0, irreps = 0;
  double worst = 0.0;
  const std::vector<std::pair<const char*, int>> cases = {{"C2", 2}, {"C2", 3}, {"C2", 4}, {"C3", 2}, {"C3", 3},
                                                          {"S3", 2}, {"S3", 3}, {"K4", 2}, {"K4", 3}};
  for (const auto& [name, n] : cases) {
    const auto g = groups::builtin_group(name);
    const auto& cat = ws.wreath(g, n);
    std::uint64_t order = 1;
    for (int i = 0; i < n; ++i) order *= static_cast<std::uint64_t>(g->order());
    for (int k = 2; k <= n; ++k) order *= static_cast<std::uint64_t>(k);
    std::uint64_t sum = 0;
    for (const auto& e : cat.entries()) sum += e.rep.dimension() * e.rep.dimension();
    if (sum != order) o.fail(std::string(name) + " n=" + std::to_string(n) + " Σdim² = " + std::to_string(sum));

    const groups::WreathGroup w(g, n);
    for (const auto& e : cat.entries()) {
      double norm = 0.0;
      for (std::uint64_t i = 0; i < w.order(); ++i) norm += std::norm(trace(e.rep.evaluate(w.element(i))));
      norm /= static_cast<double>(w.order());
      worst = std::max(worst, std::abs(norm - 1.0));
      if (!(std::abs(norm - 1.0) <= 1e-8)) o.fail(std::string(name) + " " + e.label + " norm " + std::to_string(norm));
      ++irreps;
    }
    if (verify::check_classification(ws, g, n).status != Status::Pass)
      o.fail(std::string(name) + " n=" + std::to_string(n) + ": library classification check");
    ++pairs;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d (G,n) pairs, %d irreps, worst |‖χ‖² − 1| = %.3g", pairs, irreps, worst);
  o.detail = buf;
  return o;
}

Outcome criterion_caputo(std::vector<Case>& cases, verify::Workspace& ws) {
  Outcome o;
  std::map<std::string, int> per_class;
  auto run = [&](Case& c, hypergraph::CaputoClass cls) {
    if (!hypergraph::in_class(c.h, cls)) {
      o.fail(describe(c) + " generator output not in class " + hypergraph::caputo_class_name(cls));
      return;
    }
    const double lw = oracle::lambda_star_from_regular(reg_w(c));
    const double ls = oracle::lambda_star_from_regular(reg_s(c));
    const double lstd = oracle::std_lambda_min(c.h);
    if (!close(lw, ls, 1e-8) || !close(ls, lstd, 1e-8))
      o.fail(describe(c) + " " + std::to_string(lw) + " / " + std::to_string(ls) + " / " + std::to_string(lstd));
    const auto r = verify::check_caputo_instances(ws, c.g, c.h, cls, 1e-8);
    if (r.status != Status::Pass) o.fail(describe(c) + ": library caputo check " + verify::status_name(r.status));
    ++per_class[hypergraph::caputo_class_name(cls)];
  };
  auto class_of = [](GeneratorKind k) -> std::optional<hypergraph::CaputoClass> {
    switch (k) {
      case GeneratorKind::CompleteGraph:
      case GeneratorKind::PairsRandom: return hypergraph::CaputoClass::Pairs;
      case GeneratorKind::MeanField: return hypergraph::CaputoClass::MeanField;
      case GeneratorKind::TopHeavy: return hypergraph::CaputoClass::Tuples;
      case GeneratorKind::Akp: return hypergraph::CaputoClass::Akp;
      default: return std::nullopt;
    }
  };
  for (auto& c : cases)
    if (auto cls = class_of(c.kind)) run(c, *cls);
  // Larger instances over C2 at n = 4.
  for (GeneratorKind k : {GeneratorKind::PairsRandom, GeneratorKind::MeanField, GeneratorKind::TopHeavy, GeneratorKind::Akp})
    for (std::uint64_t seed : {1, 2, 3}) {
      hypergraph::GeneratorParams p;
      p.n = 4;
      Case c{"C2", 4, k, seed, groups::builtin_group("C2"), hypergraph::generate(k, p, seed), {}, {}};
      run(c, *class_of(k));
    }
  std::string d = "three-way equality within 1e-8:";
  for (const auto& [k, v] : per_class) d += " " + k + "=" + std::to_string(v);
  o.detail = d;
  return o;
}

bool in_family(const combinatorics::MultiPartition& mu, int n) {
  const auto& triv = mu[0];
  if (triv == combinatorics::Partition({n - 1, 1})) return true;
  if (triv != combinatorics::Partition({n - 1})) return false;
  for (std::size_t t = 1; t < mu.num_slots(); ++t)
    if (mu[t] == combinatorics::Partition({1})) return true;
  return false;
}

Outcome criterion_tuples(verify::Workspace& ws) {
  Outcome o;
  int spectra = 0, graphs = 0;
  const auto g = groups::builtin_group("C2");
  std::mt19937_64 rng(20261014);
  std::uniform_real_distribution<double> weight(0.25, 4.0);
  for (int n : {3, 4}) {
    std::vector<WeightedHypergraph> hs;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      hypergraph::GeneratorParams p;
      p.n = n;
      hs.push_back(hypergraph::generate(GeneratorKind::TopHeavy, p, seed));
    }
    WeightedHypergraph dense(n);
    const VertexSet full = (1u << n) - 1u;
    dense.add_edge(full, weight(rng));
    for (int i = 0; i < n; ++i) dense.add_edge(full & ~(1u << i), weight(rng));
    hs.push_back(dense);

    for (const auto& h : hs) {
      double total = 0.0;
      for (const auto& [b, c] : h.edges()) total += c;
      for (const auto& e : ws.wreath(g, n).entries()) {
        if (e.is_trivial || in_family(e.mu, n)) continue;
        for (double v : oracle::sorted_eigenvalues(spectral::laplacian_matrix(e.rep, h, spectral::Flavor::Wreath)))
          if (!close(v, total, 1e-8))
            o.fail("n=" + std::to_string(n) + " " + e.label + " eigenvalue " + std::to_string(v) + " vs " +
                   std::to_string(total));
        ++spectra;
      }
      if (verify::check_remark_tuples(ws, g, h, 1e-8).status != Status::Pass)
        o.fail("n=" + std::to_string(n) + ": library tuples check");
      ++graphs;
    }
  }
  o.detail = std::to_string(graphs) + " hypergraphs over C2 at n=3,4, " + std::to_string(spectra) +
             " out-of-family spectra flat at Σc_B";
  return o;
}

}  // namespace

int main() {
  std::vector<Case> cases = load_cases();
  verify::Workspace ws;
  int failures = 0;
  const auto guarded = [&](int number, const char* title, const std::function<Outcome()>& run) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += report_line(number, title, o);
  };
  guarded(1, "oracle identity", [&] { return criterion_oracle(cases, ws); });
  guarded(2, "main theorem", [&] { return criterion_main(cases, ws); });
  guarded(3, "prop star", [&] { return criterion_star(cases, ws); });
  guarded(4, "prop gap", [&] { return criterion_gap(cases, ws); });
  guarded(5, "structural suite", [&] { return criterion_structural(cases, ws); });
  guarded(6, "classification", [&] { return criterion_classification(ws); });
  guarded(7, "caputo three-way equality", [&] { return criterion_caputo(cases, ws); });
  guarded(8, "tuples remark", [&] { return criterion_tuples(ws); });
  std::printf("acceptance: %d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
