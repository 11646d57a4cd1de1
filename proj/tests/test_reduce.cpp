#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <octjordan/reduce.hpp>

#include <cmath>

using namespace octjordan;
using HC = HermitianTriple<cplx>;
using MC = Mat<cplx>;

namespace {

HC random_triple(Rng& rng) {
  HC A;
  for (auto& l : A.lambda) l = random_normal(rng);
  A.a = Vec<cplx>(8);
  A.b = Vec<cplx>(8);
  A.c = Vec<cplx>(8);
  for (int i = 0; i < 8; ++i) {
    A.a(i) = random_normal(rng);
    A.b(i) = random_normal(rng);
    A.c(i) = random_normal(rng);
  }
  return A;
}

double imag_max(const Vec<cplx>& x) { return x.tail(7).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("symmetric congruence to the identity") {
  MC I3 = MC::Identity(3, 3);
  CHECK((symmetric_congruence_to_identity(I3) - I3).norm() < 1e-14);
  MC S = MC::Zero(3, 3);
  S.diagonal() << 4.0, 1.0, 1.0;
  MC H = symmetric_congruence_to_identity(S);
  CHECK((H.transpose() * S * H - I3).norm() < 1e-12);
  // diag(1/2, 1, 1) up to signs and permutation
  CHECK(std::abs(std::abs(H.cwiseAbs().colwise().sum().prod()) - 0.5) < 1e-12);
  Rng rng(81);
  for (int t = 0; t < 10; ++t) {
    MC R(3, 3);
    for (int i = 0; i < 9; ++i) R(i / 3, i % 3) = random_normal(rng);
    MC Sym = R + R.transpose();
    MC G = symmetric_congruence_to_identity(Sym);
    CHECK((G.transpose() * Sym * G - I3).norm() <= 1e-9);
  }
  MC sing = MC::Zero(3, 3);
  sing(0, 0) = 1.0;
  CHECK_THROWS_AS(symmetric_congruence_to_identity(sing), NonGeneric);
}

TEST_CASE("moving c into a plane") {
  Rng rng(82);
  HC A = random_triple(rng);
  A.c.tail(6).setZero();
  auto [g, B] = move_c_to_plane(A, basis<cplx>(3, 1));
  CHECK((flatten(B) - flatten(A)).norm() < 1e-10);
  A = random_triple(rng);
  std::tie(g, B) = move_c_to_plane(A, basis<cplx>(3, 1));
  CHECK(B.c.tail(6).cwiseAbs().maxCoeff() < 1e-9);
  CHECK(triality_defect(g.T1, g.T2, g.T1) <= 1e-10);
  HC R = random_triple(rng);
  R.c.tail(7).setZero();
  std::tie(g, B) = move_c_to_plane(R, basis<cplx>(3, 1));
  CHECK((g.T2 - MC::Identity(8, 8)).norm() == 0.0);
  HC iso = random_triple(rng);
  iso.c.setZero();
  iso.c(1) = 1.0;
  iso.c(2) = cplx(0, 1);
  CHECK_THROWS_AS(move_c_to_plane(iso, basis<cplx>(3, 1)), NonGeneric);
}

TEST_CASE("stabilizer solve") {
  Vec<cplx> i = basis<cplx>(3, 1), n = basis<cplx>(3, 6);
  // already satisfied: identity at iteration 0
  auto r0 = stabilizer_solve({{2, i, i, {}}});
  CHECK(r0.iterations == 0);
  CHECK((r0.g.T1 - MC::Identity(8, 8)).norm() == 0.0);
  Rng rng(83);
  Vec<cplx> v = Vec<cplx>::Zero(8);
  v(0) = random_normal(rng);
  v(1) = random_normal(rng);
  auto r = stabilizer_solve({{2, n, i, {}}, {1, v, v, {}}});
  CHECK(r.iterations <= 50);
  CHECK((r.g.T2 * n - i).norm() < 1e-10);
  CHECK((r.g.T1 * v - v).norm() < 1e-10);
  CHECK(triality_defect(r.g.T1, r.g.T2, r.g.T1) <= 1e-10);
}

TEST_CASE("trivial inputs") {
  auto w = reduce_to_identity(HC::identity(3), 1e-6);
  CHECK(w.moves.empty());
  CHECK(w.replay_residual == 0.0);
  HC D = HC::identity(3);
  D.lambda = {2.0, cplx(0, 3), -5.0};
  w = reduce_to_identity(D, 1e-6);
  REQUIRE(w.moves.size() == 1);
  CHECK(w.moves[0].kind == Move::Kind::congruence);
  CHECK(w.replay_residual < 1e-12);
}

TEST_CASE("random triples reduce to the identity") {
  Rng rng(84);
  int done = 0, aborted = 0;
  while (done < 5) {
    HC A = random_triple(rng);
    TransformWord w;
    try {
      w = reduce_to_identity(A, 1e-6);
    } catch (const NonGeneric&) {
      ++aborted;
      continue;
    }
    ++done;
    CHECK(w.replay_residual <= 1e-6);
    CHECK(w.max_triality_defect <= 1e-10);
    // replay from the word alone
    CHECK((flatten(replay(w, A)) - flatten(HC::identity(3))).norm() <= 1e-6);
    // shape milestones
    const HC* a7 = w.state("A7");
    REQUIRE(a7);
    double scale = flatten(*a7).norm();
    CHECK(imag_max(a7->a) <= 1e-8 * scale);
    CHECK(imag_max(a7->c) <= 1e-8 * scale);
    const HC* a11 = w.state("A11");
    REQUIRE(a11);
    CHECK(a11->b.norm() <= 1e-8 * flatten(*a11).norm());
    CHECK(a11->c.norm() <= 1e-8 * flatten(*a11).norm());
    // Spin7 moves keep both twisted invariants
    CHECK(w.max_triality_invariant_drift <= 1e-8);
  }
  CHECK(aborted <= 1);
}

TEST_CASE("non-generic input names the step") {
  Rng rng(85);
  HC A = random_triple(rng);
  A.a.setZero();
  try {
    reduce_to_identity(A, 1e-6);
    FAIL("expected NonGeneric");
  } catch (const NonGeneric& e) {
    CHECK(e.step >= 1);
    CHECK_FALSE(e.quantity.empty());
  }
}
