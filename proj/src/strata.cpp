#include <octjordan/strata.hpp>

#include <octjordan/linalg.hpp>
#include <octjordan/parallel.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace octjordan {

namespace {

using HC = HermitianTriple<cplx>;

// root of x^2 + p x + q = 0 of larger modulus (no cancellation)
cplx stable_root(cplx p, cplx q) {
  const cplx d = std::sqrt(p * p - 4.0 * q);
  const cplx s1 = -p + d, s2 = -p - d;
  return 0.5 * (std::abs(s1) >= std::abs(s2) ? s1 : s2);
}

Vec<cplx> normal_vec(Rng& rng, bool real_only) {
  Vec<cplx> v = Vec<cplx>::Zero(8);
  for (int i = 0; i < (real_only ? 1 : 8); ++i) v(i) = random_normal(rng);
  return v;
}

}  // namespace

Surface parse_surface(const std::string& s) {
  if (s == "sodm") return Surface::sodm;
  if (s == "cubic") return Surface::cubic;
  if (s == "sextic") return Surface::sextic;
  throw std::invalid_argument("unknown surface '" + s + "' (expected sodm, cubic or sextic)");
}

BlockMatrix parse_matrix(const std::string& s) {
  if (s == "M") return BlockMatrix::M;
  if (s == "N") return BlockMatrix::N;
  throw std::invalid_argument("unknown matrix '" + s + "' (expected M or N)");
}

std::string to_string(Surface s) {
  switch (s) {
    case Surface::sodm: return "sodm";
    case Surface::cubic: return "cubic";
    case Surface::sextic: return "sextic";
  }
  return "?";
}

std::string to_string(BlockMatrix m) { return m == BlockMatrix::M ? "M" : "N"; }

int surface_degree(Surface s) { return s == Surface::cubic ? 3 : 6; }

cplx surface_value(Surface s, const HC& A) {
  switch (s) {
    case Surface::sodm: return s_odm(A);
    case Surface::cubic: return twisted_cubic(A);
    case Surface::sextic: return twisted_sextic(A);
  }
  return 0.0;
}

HC sample_on(Surface s, Rng& rng, bool real_offdiag, int retries) {
  for (int t = 0; t < retries; ++t) {
    HC A;
    for (auto& l : A.lambda) l = random_normal(rng);
    A.a = normal_vec(rng, real_offdiag);
    A.b = normal_vec(rng, real_offdiag);
    A.c = normal_vec(rng, real_offdiag);
    A.lambda[2] = 0.0;
    const cplx lead = A.lambda[0] * A.lambda[1] - norm_sq(A.c);
    if (std::abs(lead) < 1e-12) continue;
    switch (s) {
      case Surface::sodm: {
        // S = D^2 - 4 phi D - |[c,b,a]|^2 with D affine in lambda3
        const cplx f = phi(A.c, A.b, A.a), ass = norm_sq(associator(A.c, A.b, A.a));
        const cplx D = stable_root(-4.0 * f, -ass);
        A.lambda[2] = (D - det_cartan(A)) / lead;
        break;
      }
      case Surface::cubic:
        A.lambda[2] = -twisted_cubic(A) / lead;
        break;
      case Surface::sextic: {
        // quadratic in Q = l1|a|^2 + l2|b|^2 + l3|c|^2 - l1 l2 l3
        const cplx na = norm_sq(A.a), nb = norm_sq(A.b), nc = norm_sq(A.c);
        const cplx rc = real_part(A.c), rab = real_part(multiply(A.a, A.b));
        const cplx Q = stable_root(-4.0 * rc * rab, 4.0 * (nb * na * rc * rc + nc * rab * rab - na * nb * nc));
        const cplx Q0 = A.lambda[0] * na + A.lambda[1] * nb;
        A.lambda[2] = (Q - Q0) / -lead;
        break;
      }
    }
    const double scale = std::pow(flatten(A).norm(), surface_degree(s));
    if (std::abs(surface_value(s, A)) <= 1e-9 * scale) return A;
  }
  throw std::runtime_error("sample_on " + to_string(s) + ": retries exhausted");
}

int numeric_corank(const Mat<cplx>& X, double tol) { return static_cast<int>(X.rows()) - rank(X, tol); }

CorankCensus corank_census(Surface s, BlockMatrix m, int samples, double tol, std::uint64_t seed, int jobs) {
  if (samples < 1) throw std::invalid_argument("census needs at least one sample");
  struct Result {
    HC A;
    int corank = 0;
    bool separated = false;
  };
  std::vector<Result> res(static_cast<std::size_t>(samples));
  parallel_for(res.size(), jobs, [&](std::size_t i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(s), i));
    HC A = sample_on(s, rng);
    const Mat<cplx> X = m == BlockMatrix::M ? build_M(A) : build_N(A);
    const Eigen::VectorXd sv = singular_values(X);
    int r = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) r += sv(k) > tol * sv(0);
    bool sep = r == 0 || r == sv.size() || sv(r - 1) >= 1e4 * sv(r);
    res[i] = {std::move(A), static_cast<int>(sv.size()) - r, sep};
  });
  CorankCensus c;
  c.surface = s;
  c.matrix = m;
  c.samples = samples;
  c.tol = tol;
  c.seed = seed;
  for (const auto& r : res) {
    ++c.histogram[r.corank];
    c.well_separated += r.separated;
  }
  int best = 0;
  for (auto [k, n] : c.histogram)
    if (n > best) {
      best = n;
      c.mode = k;
    }
  for (const auto& r : res)
    if (r.corank == c.mode) {
      c.witness = r.A;
      c.witness_rank = 24 - r.corank;
      break;
    }
  return c;
}

}  // namespace octjordan
