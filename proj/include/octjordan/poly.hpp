#pragma once

#include <octjordan/coeffs.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace octjordan {

// Exponent vectors are packed four bits per variable into a 128-bit key,
// which caps polynomials at 32 variables and per-variable degree 15.
struct MonoHash {
  std::size_t operator()(unsigned __int128 k) const noexcept {
    auto lo = static_cast<std::uint64_t>(k), hi = static_cast<std::uint64_t>(k >> 64);
    return static_cast<std::size_t>(lo * 0x9e3779b97f4a7c15ULL ^ (hi + 0x7f4a7c159e3779b9ULL + (lo << 6)));
  }
};

class SparsePoly {
 public:
  using Key = unsigned __int128;
  using Terms = std::unordered_map<Key, Fp, MonoHash>;
  static constexpr int kMaxVars = 32;
  static constexpr int kMaxExp = 15;

  SparsePoly() = default;
  SparsePoly(int c) : SparsePoly(Fp(c)) {}
  SparsePoly(Fp c);

  static SparsePoly var(int i, int nvars);
  static int exponent(Key k, int i) { return static_cast<int>((k >> (4 * i)) & 0xF); }
  static Key make_key(const std::vector<int>& exps);

  int nvars() const { return n_; }
  const Terms& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  int total_degree() const;  // -1 for zero
  Fp coeff(const std::vector<int>& exps) const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o);
  SparsePoly& operator*=(Fp c);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, Fp c) { return a *= c; }
  SparsePoly operator-() const;
  friend bool operator==(const SparsePoly& a, const SparsePoly& b);
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

  SparsePoly derivative(int i) const;
  Fp evaluate(const std::vector<Fp>& x) const;
  // terms sorted by graded lexicographic order, highest first
  std::vector<std::pair<std::vector<int>, Fp>> sorted_terms() const;
  std::string to_string() const;

 private:
  void add_term(Key k, Fp c);
  int max_exponent() const;

  int n_ = 0;
  Terms t_;
};

inline SparsePoly half(const SparsePoly& x) { return x * inverse(Fp(2)); }

template <>
struct scalar_traits<SparsePoly> {
  static constexpr bool exact = true;
  static bool is_zero(const SparsePoly& x) { return x.is_zero(); }
};

// Degree-d monomials in n variables, graded lexicographic (x1 > x2 > ...).
std::vector<std::vector<int>> monomials_grlex(int n, int d);

}  // namespace octjordan

namespace Eigen {
template <>
struct NumTraits<octjordan::SparsePoly> : GenericNumTraits<octjordan::SparsePoly> {
  using Real = octjordan::SparsePoly;
  using NonInteger = octjordan::SparsePoly;
  using Literal = octjordan::SparsePoly;
  using Nested = octjordan::SparsePoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 256
  };
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
