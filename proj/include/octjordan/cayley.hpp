#pragma once

#include <octjordan/coeffs.hpp>

#include <Eigen/Core>

#include <stdexcept>
#include <vector>

namespace octjordan {

template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class Derived>
bool is_zero(const Eigen::DenseBase<Derived>& m) {
  using S = typename Derived::Scalar;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!scalar_traits<S>::is_zero(m(i, j))) return false;
  return true;
}

// e_i e_j = sign(i,j) e_{index(i,j)}, 0-based, from Cayley-Dickson doubling
// (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
struct MultTable {
  int dim = 1;
  std::vector<int> sgn, idx;
  int sign(int i, int j) const { return sgn[i * dim + j]; }
  int index(int i, int j) const { return idx[i * dim + j]; }
};

const MultTable& mult_table(int level);

inline int level_of(Eigen::Index n) {
  switch (n) {
    case 1: return 0;
    case 2: return 1;
    case 4: return 2;
    case 8: return 3;
    default: throw std::invalid_argument("algebra element length must be 1, 2, 4 or 8");
  }
}

template <class S>
Vec<S> basis(int level, int i) {
  Vec<S> v = Vec<S>::Zero(1 << level);
  v(i) = S(1);
  return v;
}

template <class S>
Vec<S> random_vec(Rng& rng, Eigen::Index n) {
  Vec<S> v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = random_element<S>(rng);
  return v;
}

template <class S>
Vec<S> multiply(const Vec<S>& x, const Vec<S>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("level mismatch in multiply");
  const MultTable& t = mult_table(level_of(x.size()));
  const int n = t.dim;
  Vec<S> z = Vec<S>::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (scalar_traits<S>::is_zero(x(i))) continue;
    for (int j = 0; j < n; ++j) {
      if (scalar_traits<S>::is_zero(y(j))) continue;
      S p = x(i) * y(j);
      if (t.sign(i, j) > 0)
        z(t.index(i, j)) += p;
      else
        z(t.index(i, j)) -= p;
    }
  }
  return z;
}

template <class S>
Vec<S> conjugate(const Vec<S>& x) {
  Vec<S> r = -x;
  r(0) = x(0);
  return r;
}

template <class S>
S real_part(const Vec<S>& x) {
  return x(0);
}

template <class S>
Vec<S> imag_part(const Vec<S>& x) {
  Vec<S> r = x;
  r(0) = S(0);
  return r;
}

// the bilinear form polarizing norm_sq
template <class S>
S inner(const Vec<S>& x, const Vec<S>& y) {
  S s(0);
  for (Eigen::Index i = 0; i < x.size(); ++i) s += x(i) * y(i);
  return s;
}

template <class S>
S norm_sq(const Vec<S>& x) {
  return inner(x, x);
}

// column j is x * e_j
template <class S>
Mat<S> left_mult_matrix(const Vec<S>& x) {
  const MultTable& t = mult_table(level_of(x.size()));
  const int n = t.dim;
  Mat<S> m = Mat<S>::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (t.sign(i, j) > 0)
        m(t.index(i, j), j) += x(i);
      else
        m(t.index(i, j), j) -= x(i);
    }
  return m;
}

// column j is e_j * x
template <class S>
Mat<S> right_mult_matrix(const Vec<S>& x) {
  const MultTable& t = mult_table(level_of(x.size()));
  const int n = t.dim;
  Mat<S> m = Mat<S>::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (t.sign(j, i) > 0)
        m(t.index(j, i), j) += x(i);
      else
        m(t.index(j, i), j) -= x(i);
    }
  return m;
}

// [c,b,a] = (cb)a - c(ba)
template <class S>
Vec<S> associator(const Vec<S>& c, const Vec<S>& b, const Vec<S>& a) {
  return multiply(multiply(c, b), a) - multiply(c, multiply(b, a));
}

template <class S>
S phi(const Vec<S>& c, const Vec<S>& b, const Vec<S>& a) {
  Vec<S> bb = conjugate(b);
  return half(real_part(multiply(Vec<S>(multiply(c, bb) - multiply(bb, c)), a)));
}

template <class S>
S det3(const S& a00, const S& a01, const S& a02, const S& a10, const S& a11, const S& a12, const S& a20,
       const S& a21, const S& a22) {
  return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) + a02 * (a10 * a21 - a11 * a20);
}

template <class S>
S gram_im(const Vec<S>& c, const Vec<S>& b, const Vec<S>& a) {
  Vec<S> u = imag_part(c), v = imag_part(b), w = imag_part(a);
  S uv = inner(u, v), uw = inner(u, w), vw = inner(v, w);
  return det3(inner(u, u), uv, uw, uv, inner(v, v), vw, uw, vw, inner(w, w));
}

// x = x0 + x1 . l with l = e5 and x0, x1 supported on e1..e4
template <class S>
struct Splitting {
  Vec<S> x0, x1;
};

template <class S>
Splitting<S> split(const Vec<S>& x) {
  if (x.size() != 8) throw std::invalid_argument("split needs an octonion");
  Splitting<S> s{Vec<S>::Zero(8), Vec<S>::Zero(8)};
  s.x0.head(4) = x.head(4);
  // e_{4+m} = e_m . l
  s.x1.head(4) = x.tail(4);
  return s;
}

template <class S>
Vec<S> recompose(const Splitting<S>& s) {
  return s.x0 + multiply(s.x1, basis<S>(3, 4));
}

}  // namespace octjordan
