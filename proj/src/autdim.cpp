#include <octjordan/autdim.hpp>

#include <octjordan/jordan.hpp>
#include <octjordan/linalg.hpp>
#include <octjordan/parallel.hpp>

#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace octjordan {

namespace {

using Key = SparsePoly::Key;

// monomials of one degree in k variables, and where z_j * (monomial) lands one degree up
struct DegreeTable {
  std::vector<std::vector<int>> mons;
  std::unordered_map<Key, int, MonoHash> index;
  std::vector<std::vector<int>> up;  // up[idx][j]
};

class DenseForms {
 public:
  DenseForms(int k, int max_degree) : k_(k), tables_(max_degree + 1) {
    for (int d = 0; d <= max_degree; ++d) {
      auto& t = tables_[d];
      t.mons = monomials_grlex(k, d);
      for (std::size_t i = 0; i < t.mons.size(); ++i) t.index.emplace(SparsePoly::make_key(t.mons[i]), static_cast<int>(i));
    }
    for (int d = 0; d < max_degree; ++d) {
      auto& t = tables_[d];
      t.up.assign(t.mons.size(), std::vector<int>(k));
      for (std::size_t i = 0; i < t.mons.size(); ++i)
        for (int j = 0; j < k; ++j) {
          Key key = SparsePoly::make_key(t.mons[i]) + (Key(1) << (4 * j));
          t.up[i][j] = tables_[d + 1].index.at(key);
        }
    }
  }

  std::size_t size(int d) const { return tables_[d].mons.size(); }

  // (form of degree d) * (linear form l)
  std::vector<Fp> times_linear(const std::vector<Fp>& f, int d, const std::vector<Fp>& l) const {
    std::vector<Fp> r(size(d + 1), Fp(0));
    const auto& up = tables_[d].up;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] == Fp(0)) continue;
      for (int j = 0; j < k_; ++j)
        if (l[j] != Fp(0)) r[up[i][j]] += f[i] * l[j];
    }
    return r;
  }

  int up_index(int d, int idx, int j) const { return tables_[d].up[idx][j]; }

 private:
  int k_;
  std::vector<DegreeTable> tables_;
};

const DenseForms& forms6() {
  static const DenseForms f(kRestrictDim, 6);
  return f;
}

std::mutex cache_mutex;

struct Expansion {
  SparsePoly sodm;
  std::vector<SparsePoly> grad;
};

const Expansion& expansion() {
  static std::map<std::uint64_t, Expansion> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(Fp::modulus());
  if (it != cache.end()) return it->second;
  Vec<SparsePoly> x(kJordanDim);
  for (int i = 0; i < kJordanDim; ++i) x(i) = SparsePoly::var(i, kJordanDim);
  Expansion e;
  e.sodm = s_odm_gram(unflatten(x));
  e.grad = gradient(e.sodm);
  return cache.emplace(Fp::modulus(), std::move(e)).first->second;
}

}  // namespace

const SparsePoly& expand_sodm() { return expansion().sodm; }

std::vector<SparsePoly> gradient(const SparsePoly& p, int nvars) {
  std::vector<SparsePoly> g;
  g.reserve(nvars);
  for (int i = 0; i < nvars; ++i) g.push_back(p.derivative(i));
  return g;
}

std::vector<Fp> restrict_linear(const SparsePoly& p, const Mat<Fp>& m, int degree) {
  const int k = static_cast<int>(m.cols());
  const DenseForms local(k, degree);
  const DenseForms& F = (k == kRestrictDim && degree <= 6) ? forms6() : local;
  const int n = static_cast<int>(m.rows());
  std::vector<std::vector<Fp>> lin(n, std::vector<Fp>(k));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) lin[i][j] = m(i, j);

  // restriction of every sub-monomial, built by peeling off the lowest variable
  std::unordered_map<Key, std::vector<Fp>, MonoHash> memo;
  memo.emplace(Key(0), std::vector<Fp>{Fp(1)});
  auto restrict_mono = [&](auto&& self, Key key, int d) -> const std::vector<Fp>& {
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int v = 0;
    while (SparsePoly::exponent(key, v) == 0) ++v;
    const auto& sub = self(self, key - (Key(1) << (4 * v)), d - 1);
    auto r = F.times_linear(sub, d - 1, lin[v]);
    return memo.emplace(key, std::move(r)).first->second;
  };

  std::vector<Fp> out(F.size(degree), Fp(0));
  for (const auto& [key, c] : p.terms()) {
    int d = 0;
    for (int i = 0; i < n; ++i) d += SparsePoly::exponent(key, i);
    if (d != degree) throw std::invalid_argument("restrict_linear: polynomial is not homogeneous of the given degree");
    const auto& r = restrict_mono(restrict_mono, key, d);
    for (std::size_t i = 0; i < r.size(); ++i) out[i] += c * r[i];
  }
  return out;
}

int jacobian_image_rank(const Mat<Fp>& m) {
  if (m.rows() != kJordanDim || m.cols() != kRestrictDim) throw std::invalid_argument("restriction point must be 27x6");
  const auto& grad = expansion().grad;
  const DenseForms& F = forms6();
  Mat<Fp> rows = Mat<Fp>::Zero(kJordanDim * kRestrictDim, static_cast<Eigen::Index>(F.size(6)));
  for (int i = 0; i < kJordanDim; ++i) {
    auto r = restrict_linear(grad[i], m, 5);
    for (int j = 0; j < kRestrictDim; ++j)
      for (std::size_t t = 0; t < r.size(); ++t)
        rows(i * kRestrictDim + j, F.up_index(5, static_cast<int>(t), j)) += r[t];
  }
  return rank(rows);
}

AutDimReport aut_dimension_bound(std::uint64_t prime, std::uint64_t seed, int retries, int jobs) {
  if (retries < 0) throw std::invalid_argument("retries must be non-negative");
  ModulusGuard guard(prime);
  AutDimReport rep;
  rep.prime = prime;
  rep.seed = seed;
  rep.retries = retries;
  rep.rows = kJordanDim * kRestrictDim;
  rep.cols = static_cast<int>(forms6().size(6));
  if (retries == 0) return rep;
  rep.term_count = expand_sodm().size();
  rep.ranks.assign(retries, 0);
  parallel_for(static_cast<std::size_t>(retries), jobs, [&](std::size_t t) {
    Rng rng(derive_seed(seed, 0, t));
    Mat<Fp> m(kJordanDim, kRestrictDim);
    for (int i = 0; i < kJordanDim; ++i)
      for (int j = 0; j < kRestrictDim; ++j) m(i, j) = random_element<Fp>(rng);
    rep.ranks[t] = jacobian_image_rank(m);
  });
  int best = 0;
  for (int r : rep.ranks) best = std::max(best, r);
  rep.max_rank = best;
  rep.bound = rep.rows - best;
  return rep;
}

}  // namespace octjordan
