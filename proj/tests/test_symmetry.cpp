#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <octjordan/symmetry.hpp>

using namespace octjordan;
using MF = Mat<Fp>;
using HT = HermitianTriple<Fp>;

namespace {

MF block_diag(const MF& x, const MF& y, const MF& z) {
  MF d = MF::Zero(24, 24);
  d.block(0, 0, 8, 8) = x;
  d.block(8, 8, 8, 8) = y;
  d.block(16, 16, 8, 8) = z;
  return d;
}

// exact point on the twisted cubic: solve the affine equation in lambda3
HT on_twisted_cubic(Rng& rng) {
  for (;;) {
    HT A = HT::random(rng, 3);
    A.lambda[2] = Fp(0);
    Fp lead = A.lambda[0] * A.lambda[1] - norm_sq(A.c);
    if (lead == Fp(0)) continue;
    A.lambda[2] = -twisted_cubic(A) / lead;
    return A;
  }
}

}  // namespace

TEST_CASE("lifts of the identity") {
  ModulusGuard g(kDefaultPrime);
  MF I8 = MF::Identity(8, 8);
  auto t = lift_right_companion(I8);
  CHECK(t.T1 == I8);
  CHECK(lift_left_companion(I8) == I8);
  Mat<cplx> Ic = Mat<cplx>::Identity(8, 8);
  CHECK((lift_right_companion(Ic).T1 - Ic).norm() < 1e-12);
}

TEST_CASE("exact right lift over F_p") {
  ModulusGuard g(kDefaultPrime);
  Rng rng(41);
  for (int t = 0; t < 5; ++t) {
    auto tr = random_spin7<Fp>(rng);
    CHECK(triality_holds(tr.T1, tr.T2, tr.T1));
    CHECK(tr.T1.transpose() * tr.T1 == MF(MF::Identity(8, 8)));
    CHECK(tr.T2.col(0) == Vec<Fp>(basis<Fp>(3, 0)));
    // both signs are trialities; the other sign is not returned
    CHECK(triality_holds(MF(-tr.T1), tr.T2, MF(-tr.T1)));
    // (kappa(T1), T1, T2) is again a triality
    CHECK(triality_holds(kappa(tr.T1), tr.T1, tr.T2));
  }
}

TEST_CASE("complex right lift") {
  Rng rng(42);
  for (int t = 0; t < 5; ++t) {
    auto tr = random_spin7<cplx>(rng);
    CHECK(triality_defect(tr.T1, tr.T2, tr.T1) <= 1e-10);
    CHECK(triality_defect(kappa(tr.T1), tr.T1, tr.T2) <= 1e-10);
  }
}

TEST_CASE("left lift") {
  ModulusGuard g(kDefaultPrime);
  Rng rng(43);
  for (int t = 0; t < 5; ++t) {
    MF T1 = random_so7<Fp>(rng);
    MF T2;
    try {
      T2 = lift_left_companion(T1);
    } catch (const LiftRetry&) {
      continue;
    }
    CHECK(T2.transpose() * T2 == MF(MF::Identity(8, 8)));
    // T2(uv) = T1(u) T2(v)
    CHECK(triality_holds(T1, T2, T2));
  }
}

TEST_CASE("kappa") {
  ModulusGuard g(kDefaultPrime);
  MF I8 = MF::Identity(8, 8);
  CHECK(kappa(I8) == I8);
  Rng rng(44);
  MF q = random_so7<Fp>(rng);
  CHECK(kappa(kappa(q)) == q);
  MF k = kappa(q);
  CHECK(k.transpose() * k == I8);
}

TEST_CASE("Spin7 action") {
  ModulusGuard g(kDefaultPrime);
  Rng rng(45);
  HT A = HT::random(rng, 3);
  TrialityTriple<Fp> id{MF::Identity(8, 8), MF::Identity(8, 8)};
  HT B = spin7_act(id, A);
  CHECK(flatten(B) == flatten(A));
  for (int t = 0; t < 5; ++t) {
    auto tr = random_spin7<Fp>(rng);
    A = HT::random(rng, 3);
    B = spin7_act(tr, A);
    CHECK(twisted_cubic(B) == twisted_cubic(A));
    CHECK(twisted_sextic(B) == twisted_sextic(A));
    MF D = block_diag(tr.T1, tr.T1, tr.T2);
    CHECK(build_N(B) * D == D * build_N(A));
    HT C = on_twisted_cubic(rng);
    CHECK(twisted_cubic(C) == Fp(0));
    int r = rank(build_N(C));
    CHECK(r == 20);
    CHECK(rank(build_N(spin7_act(tr, C))) == r);
  }
}

TEST_CASE("SO7 action") {
  ModulusGuard g(kDefaultPrime);
  Rng rng(46);
  int done = 0;
  while (done < 5) {
    MF T1 = random_so7<Fp>(rng);
    MF T2;
    try {
      T2 = lift_left_companion(T1);
    } catch (const LiftRetry&) {
      continue;
    }
    ++done;
    HT A = HT::random(rng, 3);
    HT B = so7_act(T1, A);
    CHECK(s_odm(B) == s_odm(A));
    MF D = block_diag(T2, T2, T2);
    CHECK(build_M(B) * D == D * build_M(A));
  }
}

TEST_CASE("SL3 congruence") {
  ModulusGuard g(kDefaultPrime);
  Rng rng(47);
  HT A = HT::random(rng, 3);
  CHECK(flatten(sl3_act(MF(MF::Identity(3, 3)), A)) == flatten(A));
  for (int t = 0; t < 10; ++t) {
    MF H(3, 3);
    for (int i = 0; i < 9; ++i) H(i / 3, i % 3) = random_element<Fp>(rng);
    Fp dh = det(H);
    A = HT::random(rng, 3);
    HT B = sl3_act(H, A);
    CHECK(det_cartan(B) == dh * dh * det_cartan(A));
    CHECK(s_odm(B) == pow(dh, 4) * s_odm(A));
  }
  // a 3x3 hermitian check: the congruence of the identity is H^T H
  MF H(3, 3);
  H << 1, 2, 3, 0, 1, 4, 5, 6, 0;
  HT B = sl3_act(H, HT::identity(3));
  MF G = H.transpose() * H;
  CHECK(B.lambda[0] == G(0, 0));
  CHECK(B.lambda[2] == G(2, 2));
  CHECK(B.c(0) == G(0, 1));
  CHECK(B.a(0) == G(1, 2));
  CHECK(B.b(0) == G(2, 0));
}

TEST_CASE("twisted invariants under elementary congruences") {
  // I + t E12 preserves the twisted sextic; I + t E13 does not
  ModulusGuard g(kDefaultPrime);
  Rng rng(48);
  HT A = HT::random(rng, 3), A2 = HT::random(rng, 3);
  Fp t = random_element<Fp>(rng);
  auto elem = [&](int i, int j) {
    MF H = MF::Identity(3, 3);
    H(i, j) = t;
    return H;
  };
  CHECK(twisted_sextic(sl3_act(elem(0, 1), A)) == twisted_sextic(A));
  CHECK(twisted_sextic(sl3_act(elem(1, 0), A)) == twisted_sextic(A));
  MF H = elem(0, 2);
  Fp r1 = twisted_sextic(sl3_act(H, A)) / twisted_sextic(A);
  Fp r2 = twisted_sextic(sl3_act(H, A2)) / twisted_sextic(A2);
  CHECK(r1 != r2);
}

TEST_CASE("Lie algebra of the Spin7 copy") {
  const auto& gens = spin7_generators();
  CHECK(gens.size() == 21);
  for (const auto& g : gens) {
    CHECK((g.D + g.D.transpose()).norm() < 1e-12);
    CHECK((g.B + g.B.transpose()).norm() < 1e-12);
    // linearized triality: D(xy) = D(x) y + x B(y)
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        Vec<cplx> x = basis<cplx>(3, i), y = basis<cplx>(3, j);
        Vec<cplx> lhs = g.D * multiply(x, y);
        Vec<cplx> rhs = multiply(Vec<cplx>(g.D * x), y) + multiply(x, Vec<cplx>(g.B * y));
        CHECK((lhs - rhs).norm() < 1e-12);
      }
  }
  Rng rng(49);
  Eigen::VectorXcd th(21);
  for (int k = 0; k < 21; ++k) th(k) = 0.3 * random_normal(rng);
  auto tr = exp_spin7(th);
  CHECK(triality_defect(tr.T1, tr.T2, tr.T1) < 1e-12);
}
