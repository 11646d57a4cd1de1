#pragma once

#include <octjordan/jordan.hpp>
#include <octjordan/linalg.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace octjordan {

// Orthogonal pair with T1(x) T2(y) = T1(x y); acts on triples as
// c -> T2 c, a -> T1 a, b -> kappa(T1) b.
template <class S>
struct TrialityTriple {
  Mat<S> T1, T2;
};

// The lift could not be normalized (non-residue over F_p, or the solution
// space is not a line). The caller should draw a new rotation.
struct LiftRetry : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// max over basis pairs of |A(e_i) B(e_j) - C(e_i e_j)|, in entries (0 or 1 for exact rings)
template <class S>
double triality_defect(const Mat<S>& A, const Mat<S>& B, const Mat<S>& C) {
  double worst = 0.0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Vec<S> d = multiply(Vec<S>(A.col(i)), Vec<S>(B.col(j))) -
                 C * multiply(basis<S>(3, i), basis<S>(3, j));
      if constexpr (scalar_traits<S>::exact) {
        if (!is_zero(d)) return 1.0;
      } else {
        worst = std::max(worst, d.cwiseAbs().maxCoeff());
      }
    }
  return worst;
}

template <class S>
bool triality_holds(const Mat<S>& A, const Mat<S>& B, const Mat<S>& C) {
  static_assert(scalar_traits<S>::exact);
  return triality_defect(A, B, C) == 0.0;
}

namespace detail {

// scale X so that X^T X = I, then fix the sign
template <class S>
Mat<S> normalize_lift(Mat<S> X) {
  const S s = (X.transpose() * X)(0, 0);
  if constexpr (scalar_traits<S>::exact) {
    auto r = field_sqrt(s);
    if (!r || *r == S(0)) throw LiftRetry("lift normalization is not a square");
    X *= inverse(*r);
    // first nonzero entry (row-major) becomes the least residue of the pair +-x
    const Eigen::Index n = X.size();
    Eigen::Index k = 0;
    while (k < n && X(k / X.cols(), k % X.cols()) == S(0)) ++k;
    if (k < n && X(k / X.cols(), k % X.cols()).value() > (S::modulus() - 1) / 2) X = -X;
    if (X.transpose() * X != Mat<S>(Mat<S>::Identity(8, 8))) throw LiftRetry("lift is not orthogonal");
  } else {
    if (std::abs(s) < 1e-300) throw LiftRetry("degenerate lift");
    X /= std::sqrt(s);
    const double big = X.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < X.rows(); ++i)
      for (Eigen::Index j = 0; j < X.cols(); ++j) {
        const cplx x = X(i, j);
        if (std::abs(x) <= 1e-6 * big) continue;
        const bool neg = std::abs(x.real()) > 1e-9 * big ? x.real() < 0 : x.imag() < 0;
        if (neg) X = -X;
        return X;
      }
  }
  return X;
}

template <class S>
Mat<S> lift(const Mat<S>& T, bool right) {
  if (T.rows() != 8 || T.cols() != 8) throw std::invalid_argument("lift needs an 8x8 matrix");
  std::vector<std::pair<Mat<S>, Mat<S>>> pairs;
  for (int j = 0; j < 8; ++j) {
    const Vec<S> e = basis<S>(3, j), te = T.col(j);
    if (right)
      pairs.emplace_back(right_mult_matrix(e), right_mult_matrix(te));
    else
      pairs.emplace_back(left_mult_matrix(e), left_mult_matrix(te));
  }
  auto sol = solve_intertwiner(pairs);
  if (sol.size() != 1) throw LiftRetry("lift solution space has dimension " + std::to_string(sol.size()));
  return normalize_lift(sol.front());
}

}  // namespace detail

// T1 with T1 R_{e_j} = R_{T2 e_j} T1 for all j
template <class S>
TrialityTriple<S> lift_right_companion(const Mat<S>& T2) {
  return {detail::lift(T2, true), T2};
}

// T2 with T2 L_{e_j} = L_{T1 e_j} T2 for all j
template <class S>
Mat<S> lift_left_companion(const Mat<S>& T1) {
  return detail::lift(T1, false);
}

// C T C with C = diag(1, -1, ..., -1): x -> conj(T conj(x))
template <class S>
Mat<S> kappa(const Mat<S>& T) {
  Mat<S> r = T;
  for (Eigen::Index k = 1; k < T.rows(); ++k) {
    r(0, k) = -T(0, k);
    r(k, 0) = -T(k, 0);
  }
  return r;
}

// Cayley transform of a random skew matrix on the imaginary coordinates
template <class S>
Mat<S> random_so7(Rng& rng, int retries = 64) {
  for (int t = 0; t < retries; ++t) {
    Mat<S> s = Mat<S>::Zero(8, 8);
    for (int i = 1; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j) {
        s(i, j) = random_element<S>(rng);
        s(j, i) = -s(i, j);
      }
    try {
      return cayley_orthogonal(s);
    } catch (const std::domain_error&) {
    }
  }
  throw std::runtime_error("random_so7: retries exhausted");
}

template <class S>
TrialityTriple<S> random_spin7(Rng& rng, int retries = 64) {
  for (int t = 0; t < retries; ++t) {
    try {
      return lift_right_companion(random_so7<S>(rng));
    } catch (const LiftRetry&) {
    }
  }
  throw std::runtime_error("random_spin7: retries exhausted");
}

template <class S>
HermitianTriple<S> spin7_act(const TrialityTriple<S>& g, const HermitianTriple<S>& A) {
  HermitianTriple<S> r = A;
  r.c = g.T2 * A.c;
  r.a = g.T1 * A.a;
  r.b = kappa(g.T1) * A.b;
  return r;
}

template <class S>
HermitianTriple<S> so7_act(const Mat<S>& T1, const HermitianTriple<S>& A) {
  HermitianTriple<S> r = A;
  r.a = T1 * A.a;
  r.b = T1 * A.b;
  r.c = T1 * A.c;
  return r;
}

// A -> H^T A H for a scalar 3x3 matrix H
template <class S>
HermitianTriple<S> sl3_act(const Mat<S>& H, const HermitianTriple<S>& A) {
  if (H.rows() != 3 || H.cols() != 3) throw std::invalid_argument("sl3_act needs a 3x3 matrix");
  const auto m = to_matrix(A);
  auto entry = [&](int i, int j) {
    Vec<S> e = Vec<S>::Zero(A.a.size());
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) e += (H(k, i) * H(l, j)) * m[k][l];
    return e;
  };
  HermitianTriple<S> r;
  for (int i = 0; i < 3; ++i) r.lambda[i] = real_part(entry(i, i));
  r.c = entry(0, 1);
  r.a = entry(1, 2);
  r.b = entry(2, 0);
  return r;
}

// so7 generator B on the imaginary coordinates together with its lift D:
// D(xy) = D(x) y + x B(y)
struct Spin7Generator {
  Mat<cplx> D, B;
};

const std::vector<Spin7Generator>& spin7_generators();

// (exp(sum th_k D_k), exp(sum th_k B_k))
TrialityTriple<cplx> exp_spin7(const Eigen::VectorXcd& theta);

// left-multiplies g by exp_spin7(theta)
TrialityTriple<cplx> step_spin7(const TrialityTriple<cplx>& g, const Eigen::VectorXcd& theta);

}  // namespace octjordan
