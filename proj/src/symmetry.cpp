#include <octjordan/symmetry.hpp>

#include <unsupported/Eigen/MatrixFunctions>

namespace octjordan {

namespace {

// least-squares solution of D R_e - R_e D = R_{B e} over all basis e, made skew
Mat<cplx> linear_lift(const Mat<cplx>& B) {
  Mat<cplx> sys = Mat<cplx>::Zero(8 * 64, 64);
  Vec<cplx> rhs(8 * 64);
  Eigen::Index row = 0;
  for (int j = 0; j < 8; ++j) {
    const Mat<cplx> P = right_mult_matrix(basis<cplx>(3, j));
    const Mat<cplx> Q = right_mult_matrix(Vec<cplx>(B.col(j)));
    for (int i = 0; i < 8; ++i)
      for (int l = 0; l < 8; ++l, ++row) {
        for (int k = 0; k < 8; ++k) {
          sys(row, i * 8 + k) += P(k, l);
          sys(row, k * 8 + l) -= P(i, k);
        }
        rhs(row) = Q(i, l);
      }
  }
  Vec<cplx> x = sys.completeOrthogonalDecomposition().solve(rhs);
  if ((sys * x - rhs).norm() > 1e-10) throw std::logic_error("so7 generator has no linear lift");
  Mat<cplx> D(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int k = 0; k < 8; ++k) D(i, k) = x(i * 8 + k);
  return 0.5 * (D - D.transpose());
}

}  // namespace

const std::vector<Spin7Generator>& spin7_generators() {
  static const std::vector<Spin7Generator> gens = [] {
    std::vector<Spin7Generator> g;
    for (int p = 1; p < 8; ++p)
      for (int q = p + 1; q < 8; ++q) {
        Mat<cplx> B = Mat<cplx>::Zero(8, 8);
        B(p, q) = 1.0;
        B(q, p) = -1.0;
        g.push_back({linear_lift(B), B});
      }
    return g;
  }();
  return gens;
}

TrialityTriple<cplx> exp_spin7(const Eigen::VectorXcd& theta) {
  const auto& gens = spin7_generators();
  if (theta.size() != static_cast<Eigen::Index>(gens.size()))
    throw std::invalid_argument("exp_spin7 needs 21 coordinates");
  Mat<cplx> d = Mat<cplx>::Zero(8, 8), b = Mat<cplx>::Zero(8, 8);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    d += theta(static_cast<Eigen::Index>(k)) * gens[k].D;
    b += theta(static_cast<Eigen::Index>(k)) * gens[k].B;
  }
  return {d.exp(), b.exp()};
}

TrialityTriple<cplx> step_spin7(const TrialityTriple<cplx>& g, const Eigen::VectorXcd& theta) {
  auto e = exp_spin7(theta);
  return {e.T1 * g.T1, e.T2 * g.T2};
}

}  // namespace octjordan
