#pragma once

#include <octjordan/cayley.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace octjordan {

inline constexpr double kRankTol = 1e-8;
inline constexpr double kNullTol = 1e-10;

// In-place reduced row echelon form over an exact field; returns pivot columns.
template <class S>
std::vector<int> rref(Mat<S>& m) {
  static_assert(scalar_traits<S>::exact, "rref needs an exact field");
  std::vector<int> piv;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && scalar_traits<S>::is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    S inv = S(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || scalar_traits<S>::is_zero(m(i, c))) continue;
      S f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    piv.push_back(static_cast<int>(c));
    ++r;
  }
  return piv;
}

template <class S>
S det(Mat<S> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of a non-square matrix");
  if constexpr (scalar_traits<S>::exact) {
    const Eigen::Index n = m.rows();
    S d(1);
    for (Eigen::Index c = 0; c < n; ++c) {
      Eigen::Index p = c;
      while (p < n && scalar_traits<S>::is_zero(m(p, c))) ++p;
      if (p == n) return S(0);
      if (p != c) {
        m.row(p).swap(m.row(c));
        d = -d;
      }
      d *= m(c, c);
      S inv = S(1) / m(c, c);
      for (Eigen::Index i = c + 1; i < n; ++i) {
        if (scalar_traits<S>::is_zero(m(i, c))) continue;
        S f = m(i, c) * inv;
        for (Eigen::Index j = c; j < n; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return d;
  } else {
    return m.partialPivLu().determinant();
  }
}

template <class S>
Eigen::VectorXd singular_values(const Mat<S>& m) {
  return Eigen::JacobiSVD<Mat<S>>(m).singularValues();
}

// Exact rank over fields; over C the count of singular values above tol * sigma_max.
template <class S>
int rank(const Mat<S>& m, double tol = kRankTol) {
  if constexpr (scalar_traits<S>::exact) {
    Mat<S> w = m;
    return static_cast<int>(rref(w).size());
  } else {
    if (m.size() == 0) return 0;
    Eigen::VectorXd sv = singular_values(m);
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) r += sv(i) > tol * sv(0);
    return r;
  }
}

template <class S>
std::vector<Vec<S>> nullspace(const Mat<S>& m, double tol = kNullTol) {
  std::vector<Vec<S>> out;
  const Eigen::Index cols = m.cols();
  if constexpr (scalar_traits<S>::exact) {
    Mat<S> w = m;
    auto piv = rref(w);
    std::vector<char> is_piv(cols, 0);
    for (int c : piv) is_piv[c] = 1;
    for (Eigen::Index f = 0; f < cols; ++f) {
      if (is_piv[f]) continue;
      Vec<S> v = Vec<S>::Zero(cols);
      v(f) = S(1);
      for (std::size_t i = 0; i < piv.size(); ++i) v(piv[i]) = -w(static_cast<Eigen::Index>(i), f);
      out.push_back(std::move(v));
    }
  } else {
    Eigen::JacobiSVD<Mat<S>> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double top = sv.size() ? sv(0) : 0.0;
    for (Eigen::Index j = 0; j < cols; ++j) {
      bool null = j >= sv.size() || sv(j) <= tol * top || top == 0.0;
      if (null) out.push_back(svd.matrixV().col(j));
    }
  }
  return out;
}

template <class S>
Mat<S> inverse(const Mat<S>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  if constexpr (scalar_traits<S>::exact) {
    Mat<S> aug(n, 2 * n);
    aug << m, Mat<S>::Identity(n, n);
    auto piv = rref(aug);
    if (static_cast<Eigen::Index>(piv.size()) < n || piv[n - 1] != n - 1)
      throw std::domain_error("singular matrix");
    return aug.rightCols(n);
  } else {
    Eigen::FullPivLU<Mat<S>> lu(m);
    if (!lu.isInvertible()) throw std::domain_error("singular matrix");
    return lu.inverse();
  }
}

// Basis of { X : X P_j = Q_j X for all j }, X vectorized row-major.
template <class S>
std::vector<Mat<S>> solve_intertwiner(const std::vector<std::pair<Mat<S>, Mat<S>>>& pairs,
                                      double tol = kNullTol) {
  if (pairs.empty()) throw std::invalid_argument("no intertwiner constraints");
  const Eigen::Index n = pairs.front().first.rows();
  Mat<S> sys = Mat<S>::Zero(static_cast<Eigen::Index>(pairs.size()) * n * n, n * n);
  Eigen::Index row = 0;
  for (const auto& [P, Q] : pairs) {
    if (P.rows() != n || P.cols() != n || Q.rows() != n || Q.cols() != n)
      throw std::invalid_argument("intertwiner matrices must be square of one size");
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j, ++row)
        for (Eigen::Index k = 0; k < n; ++k) {
          sys(row, i * n + k) += P(k, j);
          sys(row, k * n + j) -= Q(i, k);
        }
  }
  std::vector<Mat<S>> out;
  for (const auto& v : nullspace(sys, tol)) {
    Mat<S> x(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) x(i, j) = v(i * n + j);
    out.push_back(std::move(x));
  }
  return out;
}

// (I - S)(I + S)^-1; throws std::domain_error when I + S is singular.
template <class S>
Mat<S> cayley_orthogonal(const Mat<S>& s) {
  const Eigen::Index n = s.rows();
  Mat<S> id = Mat<S>::Identity(n, n);
  Mat<S> ip = id + s;
  if constexpr (!scalar_traits<S>::exact) {
    Eigen::PartialPivLU<Mat<S>> lu(ip);
    if (std::abs(lu.determinant()) < 1e-300) throw std::domain_error("I + S singular");
    return (id - s) * lu.inverse();
  } else {
    return (id - s) * inverse(ip);
  }
}

// Hyperplane reflection x -> x - 2 <x,w>/<w,w> w for the bilinear form sum x_i y_i.
template <class S>
Mat<S> reflection(const Vec<S>& w) {
  S q = inner(w, w);
  const Eigen::Index n = w.size();
  return Mat<S>(Mat<S>::Identity(n, n)) - (S(2) / q) * (w * w.transpose());
}

// Rotation (product of two reflections) sending the direction of u to that of v.
// Fixes e1 when u, v are imaginary. Throws std::domain_error on isotropic input.
inline Mat<cplx> reflection_pair(const Vec<cplx>& u, const Vec<cplx>& v) {
  auto unit = [](const Vec<cplx>& x) {
    cplx q = inner(x, x);
    if (std::abs(q) <= 1e-12 * x.squaredNorm() || x.squaredNorm() == 0.0)
      throw std::domain_error("isotropic vector in reflection_pair");
    return Vec<cplx>(x / std::sqrt(q));
  };
  Vec<cplx> uu = unit(u), vv = unit(v);
  Vec<cplx> w = uu + vv;
  if (std::abs(inner(w, w)) > 1e-6) return reflection(vv) * reflection(w);
  // uu close to -vv: reflect uu onto vv, then fix the determinant with a
  // reflection in a direction orthogonal to vv and e1
  Vec<cplx> d = uu - vv;
  for (Eigen::Index k = 1; k < u.size(); ++k) {
    Vec<cplx> z = Vec<cplx>::Zero(u.size());
    z(k) = 1.0;
    z -= inner(z, vv) * vv;
    z(0) = 0.0;
    if (std::abs(inner(z, z)) > 1e-3) return reflection(z) * reflection(d);
  }
  throw std::domain_error("reflection_pair: no auxiliary direction");
}

}  // namespace octjordan
