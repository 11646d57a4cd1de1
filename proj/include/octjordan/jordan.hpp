#pragma once

#include <octjordan/cayley.hpp>

#include <array>
#include <stdexcept>

namespace octjordan {

// [[l1, c, conj(b)], [conj(c), l2, a], [b, conj(a), l3]]
template <class S>
struct HermitianTriple {
  std::array<S, 3> lambda{S(0), S(0), S(0)};
  Vec<S> a, b, c;

  int level() const { return level_of(a.size()); }

  static HermitianTriple identity(int level) {
    HermitianTriple t;
    t.lambda = {S(1), S(1), S(1)};
    t.a = t.b = t.c = Vec<S>::Zero(1 << level);
    return t;
  }

  static HermitianTriple random(Rng& rng, int level) {
    HermitianTriple t;
    for (auto& l : t.lambda) l = random_element<S>(rng);
    t.a = random_vec<S>(rng, 1 << level);
    t.b = random_vec<S>(rng, 1 << level);
    t.c = random_vec<S>(rng, 1 << level);
    return t;
  }
};

template <class S>
void check_same_level(const HermitianTriple<S>& A) {
  if (A.a.size() != A.b.size() || A.a.size() != A.c.size()) throw std::invalid_argument("mixed levels in triple");
  (void)level_of(A.a.size());
}

template <class S>
HermitianTriple<S> scaled(const HermitianTriple<S>& A, const S& t) {
  HermitianTriple<S> r = A;
  for (auto& l : r.lambda) l = l * t;
  r.a *= t;
  r.b *= t;
  r.c *= t;
  return r;
}

// flat layout: c, b, a, lambda1, lambda2, lambda3
template <class S>
Vec<S> flatten(const HermitianTriple<S>& A) {
  check_same_level(A);
  const Eigen::Index n = A.a.size();
  Vec<S> x(3 * n + 3);
  x << A.c, A.b, A.a, A.lambda[0], A.lambda[1], A.lambda[2];
  return x;
}

template <class S>
HermitianTriple<S> unflatten(const Vec<S>& x) {
  const Eigen::Index len = x.size();
  if (len < 6 || (len - 3) % 3 != 0) throw std::invalid_argument("flat triple has wrong length");
  const Eigen::Index n = (len - 3) / 3;
  (void)level_of(n);
  HermitianTriple<S> A;
  A.c = x.segment(0, n);
  A.b = x.segment(n, n);
  A.a = x.segment(2 * n, n);
  A.lambda = {x(3 * n), x(3 * n + 1), x(3 * n + 2)};
  return A;
}

template <class S>
S det_cartan(const HermitianTriple<S>& A) {
  check_same_level(A);
  const auto& l = A.lambda;
  return l[0] * l[1] * l[2] + S(2) * real_part(multiply(A.c, multiply(A.a, A.b))) - l[1] * norm_sq(A.b) -
         l[0] * norm_sq(A.a) - l[2] * norm_sq(A.c);
}

template <class S>
HermitianTriple<S> com(const HermitianTriple<S>& A) {
  check_same_level(A);
  const auto& l = A.lambda;
  const Vec<S> ab = conjugate(A.a), bb = conjugate(A.b), cb = conjugate(A.c);
  HermitianTriple<S> C;
  C.lambda = {l[1] * l[2] - norm_sq(A.a), l[0] * l[2] - norm_sq(A.b), l[0] * l[1] - norm_sq(A.c)};
  C.c = multiply(bb, ab) - l[2] * A.c;
  C.a = multiply(cb, bb) - l[0] * A.a;
  C.b = multiply(ab, cb) - l[1] * A.b;
  return C;
}

template <class S>
using Oct3x3 = std::array<std::array<Vec<S>, 3>, 3>;

template <class S>
Oct3x3<S> to_matrix(const HermitianTriple<S>& A) {
  const Eigen::Index n = A.a.size();
  auto sc = [&](const S& s) {
    Vec<S> v = Vec<S>::Zero(n);
    v(0) = s;
    return v;
  };
  return {{{sc(A.lambda[0]), A.c, conjugate(A.b)},
           {conjugate(A.c), sc(A.lambda[1]), A.a},
           {A.b, conjugate(A.a), sc(A.lambda[2])}}};
}

template <class S>
Oct3x3<S> product(const Oct3x3<S>& x, const Oct3x3<S>& y) {
  Oct3x3<S> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      r[i][j] = Vec<S>::Zero(x[0][0].size());
      for (int k = 0; k < 3; ++k) r[i][j] += multiply(x[i][k], y[k][j]);
    }
  return r;
}

// Com(A) A = A Com(A) = Det(A) I3, entrywise
template <class S>
bool com_factorization_holds(const HermitianTriple<S>& A) {
  const auto C = to_matrix(com(A)), M = to_matrix(A);
  const S d = det_cartan(A);
  for (const auto& P : {product(C, M), product(M, C)})
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Vec<S> want = Vec<S>::Zero(M[0][0].size());
        if (i == j) want(0) = d;
        if (!is_zero(Vec<S>(P[i][j] - want))) return false;
      }
  return true;
}

template <class S>
S s_odm(const HermitianTriple<S>& A) {
  const S d = det_cartan(A), f = phi(A.c, A.b, A.a);
  return d * d - S(4) * f * d - norm_sq(associator(A.c, A.b, A.a));
}

// same sextic through |[c,b,a]|^2 = 4 (Gram(Im c, Im b, Im a) - phi^2)
template <class S>
S s_odm_gram(const HermitianTriple<S>& A) {
  const S d = det_cartan(A), f = phi(A.c, A.b, A.a);
  return d * d - S(4) * f * d - S(4) * (gram_im(A.c, A.b, A.a) - f * f);
}

template <class S>
S twisted_cubic(const HermitianTriple<S>& A) {
  return det_cartan(A) - S(2) * real_part(multiply(A.c, multiply(A.a, A.b))) +
         S(2) * real_part(multiply(conjugate(A.c), multiply(A.b, A.a)));
}

template <class S>
S twisted_sextic(const HermitianTriple<S>& A) {
  const auto& l = A.lambda;
  const S na = norm_sq(A.a), nb = norm_sq(A.b), nc = norm_sq(A.c);
  const S q = l[0] * na + l[1] * nb + l[2] * nc - l[0] * l[1] * l[2];
  const S rc = real_part(A.c), rab = real_part(multiply(A.a, A.b));
  return q * q - S(4) * q * rc * rab + S(4) * (nb * na * rc * rc + nc * rab * rab - na * nb * nc);
}

namespace detail {
template <class S>
Mat<S> blocks(const HermitianTriple<S>& A, const Mat<S>& top_mid) {
  check_same_level(A);
  const Eigen::Index n = A.a.size();
  const Mat<S> I = Mat<S>::Identity(n, n);
  const Mat<S> La = left_mult_matrix(A.a), Lb = left_mult_matrix(A.b);
  Mat<S> m(3 * n, 3 * n);
  m << A.lambda[0] * I, top_mid, Lb.transpose(),  //
      top_mid.transpose(), A.lambda[1] * I, La,    //
      Lb, La.transpose(), A.lambda[2] * I;
  return m;
}
}  // namespace detail

template <class S>
Mat<S> build_M(const HermitianTriple<S>& A) {
  return detail::blocks(A, left_mult_matrix(A.c));
}

template <class S>
Mat<S> build_N(const HermitianTriple<S>& A) {
  if (A.a.size() != 8) throw std::invalid_argument("build_N needs octonions");
  return detail::blocks(A, right_mult_matrix(A.c));
}

// the three equations of the twisted kernel, evaluated at (x, y, z)
template <class S>
std::array<Vec<S>, 3> twisted_kernel_residual(const HermitianTriple<S>& A, const Vec<S>& x, const Vec<S>& y,
                                              const Vec<S>& z) {
  const auto& l = A.lambda;
  return {Vec<S>(l[0] * x + multiply(y, A.c) + multiply(conjugate(A.b), z)),
          Vec<S>(multiply(x, conjugate(A.c)) + l[1] * y + multiply(A.a, z)),
          Vec<S>(multiply(A.b, x) + multiply(conjugate(A.a), y) + l[2] * z)};
}

}  // namespace octjordan
