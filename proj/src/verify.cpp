#include <octjordan/verify.hpp>

#include <octjordan/parallel.hpp>
#include <octjordan/symmetry.hpp>

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace octjordan {

namespace {

using V = Vec<Fp>;
using M = Mat<Fp>;
using HT = HermitianTriple<Fp>;

// draws coordinates and remembers them for failure reports
struct Sampler {
  Rng& rng;
  std::vector<Fp> pt;

  Fp scalar() {
    Fp x = random_element<Fp>(rng);
    pt.push_back(x);
    return x;
  }
  V vec(int n) {
    V v(n);
    for (int i = 0; i < n; ++i) v(i) = scalar();
    return v;
  }
  V oct() { return vec(8); }
  // element of the quaternion subalgebra span(e1..e4)
  V quat() {
    V v = V::Zero(8);
    v.head(4) = vec(4);
    return v;
  }
  HT triple(int level) {
    HT A;
    for (auto& l : A.lambda) l = scalar();
    A.a = vec(1 << level);
    A.b = vec(1 << level);
    A.c = vec(1 << level);
    return A;
  }
  M mat3() {
    for (;;) {
      M h(3, 3);
      for (int i = 0; i < 9; ++i) h(i / 3, i % 3) = scalar();
      if (det(h) != Fp(0)) return h;
    }
  }
};

struct Trial {
  bool ok = true;
  std::string defect;
  std::vector<Fp> point;
  int tag = -1;
  std::optional<std::string> warning;
};

Trial equal(const Fp& lhs, const Fp& rhs) {
  Trial t;
  t.ok = lhs == rhs;
  if (!t.ok) {
    std::ostringstream os;
    os << "lhs=" << lhs << " rhs=" << rhs;
    t.defect = os.str();
  }
  return t;
}

Trial equal(const M& lhs, const M& rhs) {
  Trial t;
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) throw std::logic_error("shape mismatch in check");
  long bad = 0;
  for (Eigen::Index i = 0; i < lhs.size(); ++i) bad += lhs(i) != rhs(i);
  t.ok = bad == 0;
  if (!t.ok) t.defect = std::to_string(bad) + " nonzero entries in the difference";
  return t;
}

Trial equal(const V& lhs, const V& rhs) { return equal(M(lhs), M(rhs)); }

Trial all_of(std::initializer_list<Trial> ts) {
  for (const auto& t : ts)
    if (!t.ok) return t;
  return {};
}

M block_diag(const M& x, const M& y, const M& z) {
  const Eigen::Index n = x.rows();
  M d = M::Zero(3 * n, 3 * n);
  d.block(0, 0, n, n) = x;
  d.block(n, n, n, n) = y;
  d.block(2 * n, 2 * n, n, n) = z;
  return d;
}

V mul(const V& x, const V& y) { return multiply(x, y); }

struct SubSpec {
  std::string name;
  int degree;
  std::function<Trial(Sampler&)> fn;
};

struct CheckSpec {
  std::string id, title;
  std::vector<SubSpec> subs;
};

// ---- C8 / C9 group draws ----

std::pair<M, M> so7_with_left_lift(Rng& rng) {
  for (int t = 0; t < 64; ++t) {
    M T1 = random_so7<Fp>(rng);
    try {
      return {T1, lift_left_companion(T1)};
    } catch (const LiftRetry&) {
    }
  }
  throw std::runtime_error("left lift: retries exhausted");
}

// ---- C11: Schur-complement factorizations ----

Trial schur_factorization(Sampler& s, bool twisted, bool det_form) {
  for (;;) {
    s.pt.clear();
    HT A = s.triple(3);
    const auto& l = A.lambda;
    const Fp na = norm_sq(A.a), nc = norm_sq(A.c);
    if (na == Fp(0) || nc == Fp(0) || l[1] == Fp(0)) continue;
    const Fp delta = nc * l[0] - nc * nc / l[1], nu = l[2] * na - na * na / l[1];
    if (delta == Fp(0) || nu == Fp(0)) continue;
    const M I = M::Identity(8, 8), Z = M::Zero(8, 8);
    const M La = left_mult_matrix(A.a), Lb = left_mult_matrix(A.b);
    const M Xc = twisted ? right_mult_matrix(A.c) : left_mult_matrix(A.c);
    const M X = twisted ? build_N(A) : build_M(A);
    const M B = La * Lb * Xc - (na * nc / l[1]) * I;
    if (det_form) {
      M inner_m = (delta * nu * l[1]) * I - l[1] * (B * B.transpose());
      return equal(det(X), det(inner_m) / (pow(na, 8) * pow(nc, 8)));
    }
    M R1 = block_diag(M(Xc * inverse(nc)), I, M(La.transpose() * inverse(na)));
    M R2(24, 24);
    R2 << I, (nc / l[1]) * I, Z,  //
        Z, I, Z,                  //
        B * inverse(delta), (na / l[1]) * I, I;
    M D = block_diag(M(delta * I), M(l[1] * I), M(nu * I - (B * B.transpose()) * inverse(delta)));
    return equal(X, M(R1 * R2 * D * R2.transpose() * R1.transpose()));
  }
}

std::optional<int> matching_power(Fp lhs, Fp base) {
  for (int e = 1; e <= 8; ++e)
    if (lhs == pow(base, e)) return e;
  return std::nullopt;
}

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> specs = {
      {"C1",
       "composition algebra laws",
       {{"composition", 4,
         [](Sampler& s) {
           V x = s.oct(), y = s.oct();
           return equal(norm_sq(mul(x, y)), norm_sq(x) * norm_sq(y));
         }},
        {"conjugation_antihomomorphism", 2,
         [](Sampler& s) {
           V x = s.oct(), y = s.oct();
           return equal(conjugate(mul(x, y)), mul(conjugate(y), conjugate(x)));
         }},
        {"left_alternative", 3,
         [](Sampler& s) {
           V x = s.oct(), y = s.oct();
           return equal(mul(x, mul(x, y)), mul(mul(x, x), y));
         }},
        {"right_alternative", 3,
         [](Sampler& s) {
           V x = s.oct(), y = s.oct();
           return equal(mul(mul(y, x), x), mul(y, mul(x, x)));
         }},
        {"moufang", 4,
         [](Sampler& s) {
           V x = s.oct(), y = s.oct(), z = s.oct();
           return equal(mul(mul(x, y), mul(z, x)), mul(mul(x, mul(y, z)), x));
         }},
        {"trace_associative", 3,
         [](Sampler& s) {
           V x = s.oct(), y = s.oct(), z = s.oct();
           return equal(real_part(mul(mul(x, y), z)), real_part(mul(x, mul(y, z))));
         }}}},
      {"C2",
       "splitting relations over a quaternion subalgebra",
       {{"u(ve)=(vu)e", 2,
         [](Sampler& s) {
           V u = s.quat(), v = s.quat(), e = basis<Fp>(3, 4);
           return equal(mul(u, mul(v, e)), mul(mul(v, u), e));
         }},
        {"(ue)(ve)=-conj(v)u", 2,
         [](Sampler& s) {
           V u = s.quat(), v = s.quat(), e = basis<Fp>(3, 4);
           return equal(mul(mul(u, e), mul(v, e)), V(-mul(conjugate(v), u)));
         }},
        {"ue=e.conj(u)", 1,
         [](Sampler& s) {
           V u = s.quat(), e = basis<Fp>(3, 4);
           return equal(mul(u, e), mul(e, conjugate(u)));
         }},
        {"(ue)v=(u.conj(v))e", 2,
         [](Sampler& s) {
           V u = s.quat(), v = s.quat(), e = basis<Fp>(3, 4);
           return equal(mul(mul(u, e), v), mul(mul(u, conjugate(v)), e));
         }},
        {"split_real_parts", 3,
         [](Sampler& s) {
           V a = s.quat(), c = s.quat(), b = s.oct();
           V b0 = split(b).x0;
           return all_of({equal(real_part(mul(c, mul(a, b0))), real_part(mul(c, mul(a, b)))),
                          equal(real_part(mul(c, mul(b0, a))), real_part(mul(c, mul(b, a))))});
         }},
        {"split_associator", 6,
         [](Sampler& s) {
           V a = s.quat(), c = s.quat(), b = s.oct();
           V b1 = split(b).x1;
           V comm = mul(conjugate(c), a) - mul(a, conjugate(c));
           return equal(norm_sq(comm) * norm_sq(b1), norm_sq(associator(c, b, a)));
         }}}},
      {"C3",
       "Gram form of the associator norm",
       {{"gram_associator", 6,
         [](Sampler& s) {
           V c = s.oct(), b = s.oct(), a = s.oct();
           Fp f = phi(c, b, a);
           return equal(norm_sq(associator(c, b, a)), Fp(4) * (gram_im(c, b, a) - f * f));
         }}}},
      {"C4",
       "Com factorization",
       {{"k0", 3, [](Sampler& s) { return Trial{com_factorization_holds(s.triple(0)), "Com(A)A != Det(A)I"}; }},
        {"k1", 3, [](Sampler& s) { return Trial{com_factorization_holds(s.triple(1)), "Com(A)A != Det(A)I"}; }},
        {"k2", 3, [](Sampler& s) { return Trial{com_factorization_holds(s.triple(2)), "Com(A)A != Det(A)I"}; }},
        {"k3_quaternionic", 3,
         [](Sampler& s) {
           HT A;
           for (auto& l : A.lambda) l = s.scalar();
           A.a = s.quat();
           A.b = s.quat();
           A.c = s.quat();
           return Trial{com_factorization_holds(A), "Com(A)A != Det(A)I"};
         }}}},
      {"C5",
       "det(M_A) = Det^n for associative A",
       {{"k0", 3, [](Sampler& s) { HT A = s.triple(0); return equal(det(build_M(A)), det_cartan(A)); }},
        {"k1", 6, [](Sampler& s) { HT A = s.triple(1); return equal(det(build_M(A)), pow(det_cartan(A), 2)); }},
        {"k2", 12,
         [](Sampler& s) {
           HT A = s.triple(2);
           return equal(det(build_M(A)), pow(det_cartan(A), 4));
         }}}},
      {"C6",
       "det(M_O) = S_ODM^4",
       {{"det_M", 24,
         [](Sampler& s) {
           HT A = s.triple(3);
           return equal(det(build_M(A)), pow(s_odm(A), 4));
         }}}},
      {"C7",
       "det(N_O) = cubic^4 sextic^2",
       {{"det_N", 24,
         [](Sampler& s) {
           HT A = s.triple(3);
           Fp ts = twisted_sextic(A);
           return equal(det(build_N(A)), pow(twisted_cubic(A), 4) * ts * ts);
         }}}},
      {"C8",
       "SO7 / Spin7 equivariance",
       {{"M_conjugation", 1,
         [](Sampler& s) {
           auto [T1, T2] = so7_with_left_lift(s.rng);
           HT A = s.triple(3);
           M D = block_diag(T2, T2, T2);
           return equal(M(build_M(so7_act(T1, A)) * D), M(D * build_M(A)));
         }},
        {"N_conjugation", 1,
         [](Sampler& s) {
           auto g = random_spin7<Fp>(s.rng);
           HT A = s.triple(3);
           M D = block_diag(g.T1, g.T1, g.T2);
           return equal(M(build_N(spin7_act(g, A)) * D), M(D * build_N(A)));
         }},
        {"sodm_so7_invariance", 6,
         [](Sampler& s) {
           M T1 = random_so7<Fp>(s.rng);
           HT A = s.triple(3);
           return equal(s_odm(so7_act(T1, A)), s_odm(A));
         }},
        {"cubic_spin7_invariance", 3,
         [](Sampler& s) {
           auto g = random_spin7<Fp>(s.rng);
           HT A = s.triple(3);
           return equal(twisted_cubic(spin7_act(g, A)), twisted_cubic(A));
         }},
        {"sextic_spin7_invariance", 6,
         [](Sampler& s) {
           auto g = random_spin7<Fp>(s.rng);
           HT A = s.triple(3);
           return equal(twisted_sextic(spin7_act(g, A)), twisted_sextic(A));
         }}}},
      {"C9",
       "SL3 transpose-congruence",
       {{"det_cartan_covariance", 9,
         [](Sampler& s) {
           M H = s.mat3();
           HT A = s.triple(3);
           Fp d = det(H);
           return equal(det_cartan(sl3_act(H, A)), d * d * det_cartan(A));
         }},
        {"sodm_ratio", 24,
         [](Sampler& s) {
           M H = s.mat3();
           HT A1 = s.triple(3), A2 = s.triple(3);
           return equal(s_odm(sl3_act(H, A1)) * s_odm(A2), s_odm(sl3_act(H, A2)) * s_odm(A1));
         }},
        {"sextic_ratio", 24,
         [](Sampler& s) {
           M H = s.mat3();
           HT A1 = s.triple(3), A2 = s.triple(3);
           return equal(twisted_sextic(sl3_act(H, A1)) * twisted_sextic(A2),
                        twisted_sextic(sl3_act(H, A2)) * twisted_sextic(A1));
         }}}},
      {"C10",
       "multiplicity of the twisted eigenvalue",
       {{"multiplicity_rank", 15,
         [](Sampler& s) {
           V a = s.oct(), b = s.oct(), c = s.oct();
           Trial t;
           t.tag = multiplicity_defect(a, b, c);
           t.ok = t.tag <= 4;
           if (!t.ok) t.defect = "rank " + std::to_string(t.tag) + " > 4";
           return t;
         }},
        {"charpoly_factor", 24,
         [](Sampler& s) {
           V a = s.oct(), b = s.oct(), c = s.oct();
           Fp k = s.scalar();
           Fp lhs = charpoly_lhs(a, b, c, k), base = charpoly_factor(a, b, c, k);
           Trial t = equal(lhs, pow(base, 4));
           if (!t.ok)
             if (auto e = matching_power(lhs, base)) {
               t.ok = true;
               t.warning = "charpoly matches with exponent " + std::to_string(*e) + " instead of 4";
             }
           return t;
         }}}},
      {"C11",
       "Schur-complement factorizations at non-degenerate points",
       {{"M_factorization", 48, [](Sampler& s) { return schur_factorization(s, false, false); }},
        {"N_factorization", 48, [](Sampler& s) { return schur_factorization(s, true, false); }},
        {"M_determinant", 48, [](Sampler& s) { return schur_factorization(s, false, true); }}}},
  };
  return specs;
}

std::string decimal(Fp x) { return std::to_string(x.value()); }

}  // namespace

bool CheckReport::passed() const {
  return std::all_of(subs.begin(), subs.end(), [](const auto& s) { return s.passed; });
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

std::vector<std::string> check_ids() {
  std::vector<std::string> ids;
  for (const auto& c : registry()) ids.push_back(c.id);
  return ids;
}

SuiteReport run_suite(std::uint64_t prime, std::uint64_t seed, int trials, const std::vector<std::string>& checks,
                      int jobs) {
  if (trials < 0) throw std::invalid_argument("trials must be non-negative");
  if (prime < 3 || !is_prime(prime)) throw std::invalid_argument("modulus must be an odd prime");
  const auto& specs = registry();
  int max_degree = 0;
  for (const auto& c : specs)
    for (const auto& s : c.subs) max_degree = std::max(max_degree, s.degree);
  if (prime <= static_cast<std::uint64_t>(max_degree))
    throw std::invalid_argument("prime must exceed the largest identity degree (" + std::to_string(max_degree) + ")");
  for (const auto& id : checks)
    if (std::none_of(specs.begin(), specs.end(), [&](const auto& c) { return c.id == id; }))
      throw std::invalid_argument("unknown check " + id);

  ModulusGuard guard(prime);
  SuiteReport rep;
  rep.prime = prime;
  rep.seed = seed;
  rep.trials = trials;
  rep.max_degree = max_degree;
  for (std::size_t ci = 0; ci < specs.size(); ++ci) {
    const auto& spec = specs[ci];
    if (!checks.empty() && std::find(checks.begin(), checks.end(), spec.id) == checks.end()) continue;
    CheckReport cr{spec.id, spec.title, {}};
    for (std::size_t si = 0; si < spec.subs.size(); ++si) {
      const auto& sub = spec.subs[si];
      std::vector<Trial> results(static_cast<std::size_t>(trials));
      parallel_for(results.size(), jobs, [&](std::size_t t) {
        Rng rng(derive_seed(seed, ci * 64 + si, t));
        Sampler s{rng, {}};
        results[t] = sub.fn(s);
        results[t].point = std::move(s.pt);
      });
      SubCheckReport sr;
      sr.name = sub.name;
      sr.degree = sub.degree;
      sr.failure_bound = static_cast<double>(trials) * sub.degree / static_cast<double>(prime);
      for (std::size_t t = 0; t < results.size(); ++t) {
        const Trial& r = results[t];
        ++sr.trials_run;
        if (r.tag >= 0) ++sr.histogram[r.tag];
        if (r.warning && !sr.warning) sr.warning = r.warning;
        if (!r.ok) {
          sr.passed = false;
          TrialFailure f;
          f.trial = static_cast<int>(t);
          for (Fp x : r.point) f.point.push_back(decimal(x));
          f.defect = r.defect;
          sr.failure = std::move(f);
          break;
        }
      }
      cr.subs.push_back(std::move(sr));
    }
    rep.checks.push_back(std::move(cr));
  }
  return rep;
}

Fp charpoly_lhs(const V& a, const V& b, const V& c, Fp k) {
  const M op = left_mult_matrix(a) * left_mult_matrix(b) * left_mult_matrix(c);
  return det(M(k * M::Identity(8, 8) - op - op.transpose()));
}

Fp charpoly_factor(const V& a, const V& b, const V& c, Fp k) {
  const Fp r1 = Fp(2) * real_part(mul(c, mul(a, b))), r2 = Fp(2) * real_part(mul(c, mul(b, a)));
  return (k - r1) * (k - r2) - norm_sq(associator(c, b, a));
}

CharpolyResult charpoly_factor_check(Rng& rng, int trials) {
  CharpolyResult res;
  const V e1 = basis<Fp>(3, 0);
  const Fp k0 = random_element<Fp>(rng);
  const Fp want = pow(k0 - Fp(2), 8);
  res.calibrated = charpoly_lhs(e1, e1, e1, k0) == want && pow(charpoly_factor(e1, e1, e1, k0), 4) == want;
  res.passed = res.calibrated;
  for (int t = 0; t < trials && res.passed; ++t) {
    ++res.trials;
    V a = random_vec<Fp>(rng, 8), b = random_vec<Fp>(rng, 8), c = random_vec<Fp>(rng, 8);
    Fp k = random_element<Fp>(rng);
    Fp lhs = charpoly_lhs(a, b, c, k), base = charpoly_factor(a, b, c, k);
    if (lhs == pow(base, 4)) continue;
    if (matching_power(lhs, base))
      res.exponent_warning = true;
    else
      res.passed = false;
  }
  return res;
}

}  // namespace octjordan
