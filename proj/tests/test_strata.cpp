#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <octjordan/strata.hpp>
#include <octjordan/symmetry.hpp>

#include <cmath>

using namespace octjordan;
using HC = HermitianTriple<cplx>;

TEST_CASE("names") {
  CHECK(parse_surface("sodm") == Surface::sodm);
  CHECK(parse_surface("cubic") == Surface::cubic);
  CHECK(parse_surface("sextic") == Surface::sextic);
  CHECK_THROWS_AS(parse_surface("quartic"), std::invalid_argument);
  CHECK(parse_matrix("M") == BlockMatrix::M);
  CHECK(parse_matrix("N") == BlockMatrix::N);
  CHECK(to_string(Surface::cubic) == "cubic");
}

TEST_CASE("samples lie on their hypersurface") {
  Rng rng(71);
  for (Surface h : {Surface::sodm, Surface::cubic, Surface::sextic})
    for (int t = 0; t < 20; ++t) {
      HC A = sample_on(h, rng);
      double scale = std::pow(flatten(A).norm(), surface_degree(h));
      CHECK(std::abs(surface_value(h, A)) <= 1e-9 * scale);
    }
}

TEST_CASE("real off-diagonal data on S_ODM is a double root of Det") {
  Rng rng(72);
  HC A = sample_on(Surface::sodm, rng, /*real_offdiag=*/true);
  double scale = std::pow(flatten(A).norm(), 3);
  CHECK(std::abs(det_cartan(A)) <= 1e-6 * scale);
}

TEST_CASE("twisted cubic samples avoid the sextic") {
  Rng rng(73);
  for (int t = 0; t < 10; ++t) {
    HC A = sample_on(Surface::cubic, rng);
    double scale = std::pow(flatten(A).norm(), 6);
    CHECK(std::abs(twisted_sextic(A)) > 1e-9 * scale);
  }
}

TEST_CASE("numeric corank") {
  HC D = HC::identity(3);
  D.lambda = {0.0, 1.0, 1.0};
  CHECK(numeric_corank(build_M(D), 1e-8) == 8);
  CHECK(numeric_corank(build_M(HC::identity(3)), 1e-8) == 0);
}

TEST_CASE("census modes") {
  auto c = corank_census(Surface::sodm, BlockMatrix::M, 30, 1e-8, 5, 1);
  CHECK(c.samples == 30);
  CHECK(c.mode == 4);
  CHECK(c.histogram.at(4) >= 29);
  CHECK(c.backend == "jacobi_svd");
  CHECK(c.well_separated >= 27);
  auto s = corank_census(Surface::sextic, BlockMatrix::N, 30, 1e-8, 5, 1);
  CHECK(s.mode == 2);
  REQUIRE(s.witness.has_value());
  CHECK(s.witness_rank == 22);
  auto k = corank_census(Surface::cubic, BlockMatrix::N, 30, 1e-8, 5, 1);
  CHECK(k.mode == 4);
  int total = 0;
  for (auto [r, n] : k.histogram) total += n;
  CHECK(total == 30);
}

TEST_CASE("Spin7 moves preserve corank on the twisted strata") {
  Rng rng(74);
  for (Surface h : {Surface::cubic, Surface::sextic})
    for (int t = 0; t < 5; ++t) {
      HC A = sample_on(h, rng);
      auto g = random_spin7<cplx>(rng);
      CHECK(numeric_corank(build_N(spin7_act(g, A)), 1e-8) == numeric_corank(build_N(A), 1e-8));
    }
}

TEST_CASE("census is reproducible") {
  auto a = corank_census(Surface::cubic, BlockMatrix::N, 8, 1e-8, 11, 1);
  auto b = corank_census(Surface::cubic, BlockMatrix::N, 8, 1e-8, 11, 2);
  CHECK(a.histogram == b.histogram);
  CHECK(a.well_separated == b.well_separated);
  CHECK_THROWS_AS(corank_census(Surface::cubic, BlockMatrix::N, 0, 1e-8, 11, 1), std::invalid_argument);
}
