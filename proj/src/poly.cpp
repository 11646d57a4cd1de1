#include <octjordan/poly.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace octjordan {

SparsePoly::SparsePoly(Fp c) {
  if (c != Fp(0)) t_.emplace(Key(0), c);
}

SparsePoly SparsePoly::var(int i, int nvars) {
  if (i < 0 || i >= nvars || nvars > kMaxVars) throw std::out_of_range("variable index");
  SparsePoly p;
  p.n_ = nvars;
  p.t_.emplace(Key(1) << (4 * i), Fp(1));
  return p;
}

SparsePoly::Key SparsePoly::make_key(const std::vector<int>& exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars)) throw std::out_of_range("too many variables");
  Key k = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > kMaxExp) throw std::out_of_range("exponent out of range");
    k |= Key(exps[i]) << (4 * i);
  }
  return k;
}

int SparsePoly::total_degree() const {
  int best = -1;
  for (const auto& [k, c] : t_) {
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) d += exponent(k, i);
    best = std::max(best, d);
  }
  return best;
}

Fp SparsePoly::coeff(const std::vector<int>& exps) const {
  auto it = t_.find(make_key(exps));
  return it == t_.end() ? Fp(0) : it->second;
}

void SparsePoly::add_term(Key k, Fp c) {
  if (c == Fp(0)) return;
  auto [it, fresh] = t_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == Fp(0)) t_.erase(it);
  }
}

int SparsePoly::max_exponent() const {
  int m = 0;
  for (const auto& [k, c] : t_)
    for (int i = 0; i < n_; ++i) m = std::max(m, exponent(k, i));
  return m;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  n_ = std::max(n_, o.n_);
  for (const auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  n_ = std::max(n_, o.n_);
  for (const auto& [k, c] : o.t_) add_term(k, -c);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r;
  r.n_ = std::max(a.n_, b.n_);
  if (a.t_.empty() || b.t_.empty()) return r;
  if (a.max_exponent() + b.max_exponent() > SparsePoly::kMaxExp)
    throw std::overflow_error("per-variable degree exceeds packed key capacity");
  r.t_.reserve(a.t_.size() * b.t_.size());
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) r.add_term(ka + kb, ca * cb);
  return r;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) { return *this = *this * o; }

SparsePoly& SparsePoly::operator*=(Fp c) {
  if (c == Fp(0)) {
    t_.clear();
    return *this;
  }
  for (auto& [k, v] : t_) v *= c;
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [k, v] : r.t_) v = -v;
  return r;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (const auto& [k, c] : a.t_) {
    auto it = b.t_.find(k);
    if (it == b.t_.end() || it->second != c) return false;
  }
  return true;
}

SparsePoly SparsePoly::derivative(int i) const {
  SparsePoly r;
  r.n_ = n_;
  for (const auto& [k, c] : t_) {
    int e = exponent(k, i);
    if (e == 0) continue;
    r.add_term(k - (Key(1) << (4 * i)), c * Fp(e));
  }
  return r;
}

Fp SparsePoly::evaluate(const std::vector<Fp>& x) const {
  if (static_cast<int>(x.size()) < n_) throw std::invalid_argument("evaluation point too short");
  Fp s(0);
  for (const auto& [k, c] : t_) {
    Fp m = c;
    for (int i = 0; i < n_; ++i) {
      int e = exponent(k, i);
      if (e) m *= pow(x[i], static_cast<std::uint64_t>(e));
    }
    s += m;
  }
  return s;
}

std::vector<std::pair<std::vector<int>, Fp>> SparsePoly::sorted_terms() const {
  std::vector<std::pair<std::vector<int>, Fp>> out;
  out.reserve(t_.size());
  for (const auto& [k, c] : t_) {
    std::vector<int> e(n_);
    for (int i = 0; i < n_; ++i) e[i] = exponent(k, i);
    out.emplace_back(std::move(e), c);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    int dx = 0, dy = 0;
    for (int v : x.first) dx += v;
    for (int v : y.first) dy += v;
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  return out;
}

std::string SparsePoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted_terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.value();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

std::vector<std::vector<int>> monomials_grlex(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(n, 0);
  // lex-descending enumeration of compositions of d into n parts
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
  };
  if (n > 0) rec(rec, 0, d);
  return out;
}

}  // namespace octjordan
