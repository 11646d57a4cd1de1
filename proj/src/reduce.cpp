#include <octjordan/reduce.hpp>

#include <algorithm>
#include <cmath>

namespace octjordan {

namespace {

using HC = HermitianTriple<cplx>;
using MC = Mat<cplx>;
using VC = Vec<cplx>;

MC elementary(int i, int j, cplx t) {
  MC H = MC::Identity(3, 3);
  H(i, j) = t;
  return H;
}

TrialityTriple<cplx> identity_triple() { return {MC::Identity(8, 8), MC::Identity(8, 8)}; }

double scale_of(const HC& A) { return flatten(A).norm(); }

// every proof denominator must clear 1e-8 * |A|^deg
void require(int step, const char* what, cplx v, const HC& A, int deg) {
  if (std::abs(v) < 1e-8 * std::pow(scale_of(A), deg)) throw NonGeneric(step, what, std::abs(v));
}

std::vector<int> all_rows() { return {0, 1, 2, 3, 4, 5, 6, 7}; }

}  // namespace

HC apply_move(const Move& m, const HC& A) {
  return m.kind == Move::Kind::triality ? spin7_act(m.t, A) : sl3_act(m.H, A);
}

const HC* TransformWord::state(const std::string& label) const {
  for (const auto& [l, s] : states)
    if (l == label) return &s;
  return nullptr;
}

HC replay(const TransformWord& w, const HC& A) {
  HC B = A;
  for (const auto& m : w.moves) B = apply_move(m, B);
  return scaled(B, w.scalar);
}

double distance_to_identity(const HC& A) { return (flatten(A) - flatten(HC::identity(A.level()))).norm(); }

MC symmetric_congruence_to_identity(const MC& S) {
  if (S.rows() != 3 || S.cols() != 3) throw std::invalid_argument("expected a 3x3 symmetric matrix");
  const double n = S.norm();
  if (std::abs(S.determinant()) <= 1e-10 * n * n * n) throw NonGeneric(12, "det of the symmetric form", std::abs(S.determinant()));
  std::vector<VC> rest;
  for (int k = 0; k < 3; ++k) rest.push_back(MC::Identity(3, 3).col(k));
  MC H(3, 3);
  for (int col = 0; col < 3; ++col) {
    std::size_t best = 0;
    double q = -1.0;
    for (std::size_t k = 0; k < rest.size(); ++k) {
      const double v = std::abs((rest[k].transpose() * S * rest[k])(0, 0));
      if (v > q) {
        q = v;
        best = k;
      }
    }
    VC v = rest[best];
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    v /= std::sqrt((v.transpose() * S * v)(0, 0));
    H.col(col) = v;
    for (auto& w : rest) w -= (w.transpose() * S * v)(0, 0) * v;
  }
  return H;
}

std::pair<TrialityTriple<cplx>, HC> move_c_to_plane(const HC& A, const VC& u, int step) {
  const VC im = imag_part(A.c);
  const double sc = std::max(scale_of(A), 1e-300);
  if (im.norm() <= 1e-14 * sc) return {identity_triple(), A};
  require(step, "norm_sq(Im c)", inner(im, im), A, 2);
  const VC along = (inner(im, u) / inner(u, u)) * u;
  if ((im - along).norm() <= 1e-14 * sc) return {identity_triple(), A};
  // the target line has two directions; take the one closer to Im c
  const VC target = std::real(inner(im, u)) < 0 ? VC(-u) : u;
  try {
    auto g = lift_right_companion(reflection_pair(im, target));
    return {g, spin7_act(g, A)};
  } catch (const std::domain_error&) {
    throw NonGeneric(step, "reflection through an isotropic vector", 0.0);
  } catch (const LiftRetry& e) {
    throw NonGeneric(step, e.what(), 0.0);
  }
}

SteerResult stabilizer_solve(const std::vector<Constraint>& cs, int step, int max_iters, int max_restarts) {
  const auto& gens = spin7_generators();
  const Eigen::Index K = static_cast<Eigen::Index>(gens.size());
  double scale = 1.0;
  Eigen::Index m = 0;
  for (const auto& c : cs) {
    scale += c.x.norm() + c.target.norm();
    m += c.rows.empty() ? 8 : static_cast<Eigen::Index>(c.rows.size());
  }
  const double tol = 1e-12 * scale;

  auto gather = [&](const auto& fill) {
    VC r(m);
    Eigen::Index k = 0;
    for (const auto& c : cs) {
      const VC full = fill(c);
      const auto rows = c.rows.empty() ? all_rows() : c.rows;
      for (int i : rows) r(k++) = full(i);
    }
    return r;
  };
  auto residual = [&](const TrialityTriple<cplx>& g) {
    return gather([&](const Constraint& c) { return VC((c.slot == 1 ? g.T1 : g.T2) * c.x - c.target); });
  };

  Rng rng(derive_seed(0x7374656572ULL, static_cast<std::uint64_t>(step)));
  double last = 0.0;
  for (int restart = 0; restart <= max_restarts; ++restart) {
    TrialityTriple<cplx> g = identity_triple();
    if (restart > 0) {
      Eigen::VectorXcd th(K);
      for (Eigen::Index k = 0; k < K; ++k) th(k) = 0.5 * random_normal(rng);
      g = exp_spin7(th);
    }
    for (int it = 0; it <= max_iters; ++it) {
      const VC r = residual(g);
      last = r.norm();
      if (last <= tol) return {g, it, restart, last};
      if (it == max_iters) break;
      MC J(m, K);
      for (Eigen::Index k = 0; k < K; ++k)
        J.col(k) = gather([&](const Constraint& c) {
          return VC(c.slot == 1 ? VC(gens[k].D * (g.T1 * c.x)) : VC(gens[k].B * (g.T2 * c.x)));
        });
      const Eigen::VectorXcd d = -J.completeOrthogonalDecomposition().solve(r);
      double s = 1.0;
      TrialityTriple<cplx> next;
      for (;;) {
        next = step_spin7(g, s * d);
        if (residual(next).norm() < last * (1.0 - 0.25 * s) || s <= 1e-4) break;
        s *= 0.5;
      }
      g = std::move(next);
    }
  }
  throw NonGeneric(step, "steering residual", last);
}

TransformWord reduce_to_identity(const HC& A0, double /*tol*/) {
  if (A0.a.size() != 8) throw std::invalid_argument("reduction needs octonionic entries");
  TransformWord w;
  w.input = A0;
  HC A = A0;
  auto T = [&](const TrialityTriple<cplx>& g) {
    HC B = spin7_act(g, A);
    const double sc = scale_of(A);
    w.max_triality_defect = std::max(w.max_triality_defect, triality_defect(g.T1, g.T2, g.T1));
    w.max_triality_invariant_drift =
        std::max({w.max_triality_invariant_drift, std::abs(twisted_cubic(B) - twisted_cubic(A)) / std::pow(sc, 3),
                  std::abs(twisted_sextic(B) - twisted_sextic(A)) / std::pow(sc, 6)});
    w.moves.push_back({Move::Kind::triality, g, {}});
    A = std::move(B);
  };
  auto C = [&](const MC& H) {
    w.moves.push_back({Move::Kind::congruence, {}, H});
    A = sl3_act(H, A);
  };
  auto mark = [&](const char* label) { w.states.emplace_back(label, A); };
  auto finish = [&] {
    w.final_state = A;
    w.residual = distance_to_identity(A);
    w.replay_residual = distance_to_identity(replay(w, A0));
    return w;
  };

  const double sc0 = scale_of(A0);
  if (distance_to_identity(A0) <= 1e-14 * std::max(sc0, 1.0)) return finish();
  const double off = std::max({A0.a.norm(), A0.b.norm(), A0.c.norm()});

  if (off > 1e-12 * sc0) {
    const VC i = basis<cplx>(3, 1), n = basis<cplx>(3, 6), zero = VC::Zero(8);
    // 1: c into span(1, i)
    T(move_c_to_plane(A, i, 1).first);
    mark("A1");
    // 2: clear the pairing of the quaternionic and l-parts of a
    {
      const VC cb = conjugate(A.c);
      const cplx pairing = (cb.head(4).transpose() * A.a.tail(4))(0, 0);
      require(2, "<conj(c)_0, a_1>", pairing, A, 2);
      C(elementary(0, 2, -(A.a.head(4).transpose() * A.a.tail(4))(0, 0) / pairing));
    }
    mark("A2");
    // 3: T2 i = n, T1 a in span(i, n)
    T(stabilizer_solve({{2, i, n, {}}, {1, A.a, zero, {0, 2, 3, 4, 5, 7}}}, 3).g);
    mark("A3");
    // 4: remove the n-component of a against c
    require(4, "c_n", A.c(6), A, 1);
    C(elementary(0, 2, A.a(6) / A.c(6)));
    mark("A4");
    // 5: T2 n = i while T1 fixes a
    T(stabilizer_solve({{2, n, i, {}}, {1, A.a, A.a, {}}}, 5).g);
    mark("A5");
    // 6: make c real
    require(6, "a_i", A.a(1), A, 1);
    C(elementary(2, 0, A.c(1) / A.a(1)));
    mark("A6");
    // 7: make a real; a and c are now both real
    T(stabilizer_solve({{1, A.a, zero, {1, 2, 3, 4, 5, 6, 7}}}, 7).g);
    mark("A7");
    // 8: clear the real c and a, then swap rows 2 and 3
    require(8, "Re a", A.a(0), A, 1);
    C(elementary(2, 0, -A.c(0) / A.a(0)));
    require(8, "lambda2", A.lambda[1], A, 1);
    C(elementary(1, 2, -A.a(0) / A.lambda[1]));
    MC P(3, 3);
    P << -1, 0, 0, 0, 0, 1, 0, 1, 0;
    C(P);
    mark("A8");
    // 9: c into span(1, i) again
    T(move_c_to_plane(A, i, 9).first);
    mark("A9");
    // 10: swap rows 1 and 3
    MC Q(3, 3);
    Q << 0, 0, 1, 0, -1, 0, 1, 0, 0;
    C(Q);
    mark("A10");
    // 11: make a real; b and c vanish
    T(stabilizer_solve({{1, A.a, zero, {1, 2, 3, 4, 5, 6, 7}}}, 11).g);
    mark("A11");
  }
  // 12: the remaining symmetric complex form goes to the identity
  MC S(3, 3);
  S << A.lambda[0], A.c(0), A.b(0), A.c(0), A.lambda[1], A.a(0), A.b(0), A.a(0), A.lambda[2];
  C(symmetric_congruence_to_identity(S));
  return finish();
}

}  // namespace octjordan
