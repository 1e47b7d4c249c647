#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "support/oracles.hpp"
#include "wreathgap/sn_reps.hpp"
#include "wreathgap/spectral.hpp"

using namespace wreathgap;
using namespace wreathgap::spectral;
using combinatorics::Partition;
using hypergraph::WeightedHypergraph;

namespace {

const std::string kData = WREATHGAP_TEST_DATA;

WeightedHypergraph k3() { return hypergraph::load_hypergraph(kData + "/k3.json"); }

}  // namespace

TEST_CASE("K3 spectra over S3") {
  const auto cat = IrrepCatalog::symmetric(3);
  const auto h = k3();
  const auto& std = cat->find("(2,1)");
  const auto rep = spectral_report(std.rep, h, Flavor::Symmetric);
  REQUIRE(rep.eigenvalues.size() == 2);
  CHECK(rep.eigenvalues[0] == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(rep.eigenvalues[1] == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(spectral_report(cat->find("(3)").rep, h, Flavor::Symmetric).lambda_min == doctest::Approx(0.0));
  CHECK(spectral_report(cat->find("(1,1,1)").rep, h, Flavor::Symmetric).lambda_min == doctest::Approx(3.0));
  const auto star = lambda_min_star_regular(*cat, h, 1e-8);
  REQUIRE(star.value);
  CHECK(*star.value == doctest::Approx(1.5));
  CHECK(star.witnesses == std::vector<std::string>{"(2,1)"});
  CHECK(spectral_report(reps::std_rep(3), h, Flavor::Symmetric).lambda_min == doctest::Approx(1.5));
}

TEST_CASE("single edge on two vertices over C2") {
  WeightedHypergraph h(2);
  h.add_edge(0b11u, 1.0);
  const auto cat = IrrepCatalog::wreath(groups::builtin_group("C2"), 2, false);
  const auto star = lambda_min_star_regular(*cat, h, 1e-8);
  REQUIRE(star.value);
  CHECK(*star.value == doctest::Approx(1.0));
  for (const auto& e : cat->entries())
    if (!e.is_trivial)
      for (double v : spectral_report(e.rep, h, Flavor::Wreath).eigenvalues) CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("catalog labels") {
  const auto cat = IrrepCatalog::wreath(groups::builtin_group("C2"), 2, false);
  CHECK(cat->entries().size() == 5);
  CHECK(cat->find("(1)|(1)").rep.dimension() == 2);
  CHECK(cat->find(" (1) | (1) ").label == "(1)|(1)");
  CHECK_THROWS_AS(cat->find("(3)|()"), InvalidArgument);
  CHECK(cat->context().to_string() == "C2≀S2");
  CHECK(IrrepCatalog::symmetric(4)->entries().size() == 5);
  CHECK_THROWS_AS(IrrepCatalog::wreath(groups::builtin_group("C12"), 4, false), GuardExceeded);
}

TEST_CASE("averaging projectors") {
  const auto g = groups::builtin_group("S3");
  const auto cat = IrrepCatalog::wreath(g, 3, false);
  for (const auto& e : cat->entries()) {
    for (VertexSet b : {0b001u, 0b011u, 0b101u, 0b111u}) {
      for (Flavor f : {Flavor::Symmetric, Flavor::Wreath}) {
        const CMatrix p = averaging_projector(e.rep, b, f);
        CHECK(max_abs_diff(p * p, p) < 1e-10);
        CHECK(hermitian_defect(p) < 1e-12);
        CHECK(max_abs_diff(p, averaging_projector_from_generators(e.rep, b, f)) < 1e-9);
      }
    }
    // Singletons are inert under S_B and average G at that coordinate under W_B.
    CHECK(max_abs_diff(averaging_projector(e.rep, 0b010u, Flavor::Symmetric), CMatrix::identity(e.rep.dimension())) == 0.0);
    CMatrix avg(e.rep.dimension(), e.rep.dimension());
    for (int x = 0; x < g->order(); ++x) avg += e.rep.evaluate(groups::embed_base({0, x, 0}));
    avg *= Complex(1.0 / g->order());
    CHECK(max_abs_diff(averaging_projector(e.rep, 0b010u, Flavor::Wreath), avg) < 1e-12);
  }
}

TEST_CASE("lift equality on lifted S_n irreps") {
  const auto g = groups::builtin_group("C3");
  const auto h = hypergraph::load_hypergraph(kData + "/pairs4.json");
  for (const auto& mu : combinatorics::enumerate_partitions(4)) {
    const auto tau = reps::sn_irrep(mu, 4);
    const auto lifted = reps::lift_representation(tau, g);
    CHECK(max_abs_diff(laplacian_matrix(tau, h, Flavor::Symmetric), laplacian_matrix(lifted, h, Flavor::Wreath)) <= 1e-10);
  }
}

TEST_CASE("Laplacians are PSD and Hermitian") {
  const auto g = groups::builtin_group("K4");
  WeightedHypergraph h(3);
  h.add_edge(0b011u, 0.7);
  h.add_edge(0b111u, 1.3);
  h.add_edge(0b100u, 0.4);
  const auto cat = IrrepCatalog::wreath(g, 3, false);
  for (const auto& e : cat->entries()) {
    const CMatrix l = laplacian_matrix(e.rep, h, Flavor::Wreath);
    CHECK(hermitian_defect(l) < 1e-12);
    CHECK(oracle::sorted_eigenvalues(l).front() > -1e-10);
  }
  CHECK_THROWS_AS(laplacian_matrix(reps::std_rep(4), h, Flavor::Symmetric), InvalidArgument);
}

TEST_CASE("Cayley table") {
  const auto g = groups::builtin_group("S3");
  const CayleyTable t(g, 2, 2000);
  CHECK(t.order() == 72);
  for (std::size_t x = 0; x < t.order(); x += 5)
    for (std::size_t y = 0; y < t.order(); y += 3) {
      const auto want = groups::wreath_multiply(*g, t.group().element(x), t.group().element(y));
      CHECK(t.multiply(x, y) == t.group().index(want));
    }
  CHECK(t.element_indices(groups::SubgroupKind::Wreath, 0b11u).size() == 72);
  CHECK(t.element_indices(groups::SubgroupKind::Symmetric, 0b11u).size() == 2);
  CHECK(t.element_indices(groups::SubgroupKind::Base, 0b01u).size() == 6);
  CHECK_THROWS_AS(CayleyTable(g, 3, 1000), GuardExceeded);
}

TEST_CASE("regular Laplacian matches the monomial-matrix oracle") {
  const auto h = hypergraph::load_hypergraph(kData + "/pairs4.json");
  for (const char* name : {"C1", "C2"}) {
    const auto g = groups::builtin_group(name);
    const CayleyTable t(g, 4, 2000);
    const bool wreath = std::string(name) != "C1";
    const auto ours = oracle::sorted_eigenvalues(regular_laplacian(t, h, wreath ? Flavor::Wreath : Flavor::Symmetric));
    const auto ref = oracle::sorted_eigenvalues(oracle::regular_laplacian(*g, 4, h, wreath));
    CHECK(oracle::max_sorted_diff(ours, ref) < 1e-10);
    CHECK(oracle::max_sorted_diff(symmetric_eigenvalues(regular_laplacian(t, h, wreath ? Flavor::Wreath : Flavor::Symmetric)), ref) < 1e-9);
  }
}

TEST_CASE("dense order guard reads the environment") {
  unsetenv("WREATHGAP_MAX_ORDER");
  CHECK(dense_order_guard() == kDefaultMaxOrder);
  setenv("WREATHGAP_MAX_ORDER", "5000", 1);
  CHECK(dense_order_guard() == 5000);
  setenv("WREATHGAP_MAX_ORDER", "junk", 1);
  CHECK(dense_order_guard() == kDefaultMaxOrder);
  unsetenv("WREATHGAP_MAX_ORDER");
}
