#include <octjordan/cayley.hpp>

#include <array>

namespace octjordan {

namespace {

// dense integer coordinate product via doubling, used only to build the tables
std::vector<int> cd_mul(const std::vector<int>& x, const std::vector<int>& y) {
  const std::size_t n = x.size();
  if (n == 1) return {x[0] * y[0]};
  const std::size_t h = n / 2;
  std::vector<int> a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  std::vector<int> c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  auto conj = [](std::vector<int> v) {
    for (std::size_t i = 1; i < v.size(); ++i) v[i] = -v[i];
    return v;
  };
  auto ac = cd_mul(a, c), db = cd_mul(conj(d), b), da = cd_mul(d, a), bc = cd_mul(b, conj(c));
  std::vector<int> out(n);
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = ac[i] - db[i];
    out[h + i] = da[i] + bc[i];
  }
  return out;
}

MultTable build(int level) {
  MultTable t;
  t.dim = 1 << level;
  t.sgn.resize(t.dim * t.dim);
  t.idx.resize(t.dim * t.dim);
  for (int i = 0; i < t.dim; ++i)
    for (int j = 0; j < t.dim; ++j) {
      std::vector<int> ei(t.dim, 0), ej(t.dim, 0);
      ei[i] = 1;
      ej[j] = 1;
      auto p = cd_mul(ei, ej);
      for (int k = 0; k < t.dim; ++k)
        if (p[k] != 0) {
          t.sgn[i * t.dim + j] = p[k];
          t.idx[i * t.dim + j] = k;
        }
    }
  return t;
}

}  // namespace

const MultTable& mult_table(int level) {
  static const std::array<MultTable, 4> tables = {build(0), build(1), build(2), build(3)};
  if (level < 0 || level > 3) throw std::invalid_argument("Cayley-Dickson level must be 0..3");
  return tables[level];
}

}  // namespace octjordan
