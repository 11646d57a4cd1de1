#pragma once

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <type_traits>

namespace octjordan {

using cplx = std::complex<double>;
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;  // 2^31 - 1

bool is_prime(std::uint64_t n);

// Element of Z/p. The modulus is process-wide: every worker in a run shares it.
class Fp {
 public:
  using u64 = std::uint64_t;

  Fp() = default;
  Fp(int x) : v_(reduce_signed(x)) {}
  Fp(long x) : v_(reduce_signed(x)) {}
  Fp(long long x) : v_(reduce_signed(x)) {}
  Fp(unsigned x) : v_(x % p_) {}
  Fp(unsigned long x) : v_(x % p_) {}
  Fp(unsigned long long x) : v_(x % p_) {}

  static u64 modulus() { return p_; }
  // throws std::invalid_argument unless p is an odd prime
  static void set_modulus(u64 p);

  u64 value() const { return v_; }

  Fp& operator+=(Fp o) {
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  Fp& operator-=(Fp o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  Fp& operator*=(Fp o) {
    v_ = static_cast<u64>((static_cast<unsigned __int128>(v_) * o.v_) % p_);
    return *this;
  }
  Fp& operator/=(Fp o);

  friend Fp operator+(Fp a, Fp b) { return a += b; }
  friend Fp operator-(Fp a, Fp b) { return a -= b; }
  friend Fp operator*(Fp a, Fp b) { return a *= b; }
  friend Fp operator/(Fp a, Fp b) { return a /= b; }
  Fp operator-() const { return Fp() - *this; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }
  friend std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.v_; }

  static Fp from_raw(u64 v) {
    Fp r;
    r.v_ = v;
    return r;
  }

 private:
  template <class I>
  static u64 reduce_signed(I x) {
    long long m = static_cast<long long>(x % static_cast<long long>(p_));
    return m < 0 ? static_cast<u64>(m + static_cast<long long>(p_)) : static_cast<u64>(m);
  }

  u64 v_ = 0;
  static inline u64 p_ = kDefaultPrime;
};

// Sets the modulus for a scope and restores the previous one.
class ModulusGuard {
 public:
  explicit ModulusGuard(std::uint64_t p) : old_(Fp::modulus()) { Fp::set_modulus(p); }
  ~ModulusGuard() { Fp::set_modulus(old_); }
  ModulusGuard(const ModulusGuard&) = delete;
  ModulusGuard& operator=(const ModulusGuard&) = delete;

 private:
  std::uint64_t old_;
};

Fp pow(Fp x, std::uint64_t e);
// throws std::domain_error on zero
Fp inverse(Fp x);
// Tonelli-Shanks; nullopt for non-residues
std::optional<Fp> field_sqrt(Fp x);

// --- generic scalar helpers shared by every coefficient ring ---

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Fp> {
  static constexpr bool exact = true;
  static bool is_zero(const Fp& x) { return x == Fp(0); }
};

template <>
struct scalar_traits<cplx> {
  static constexpr bool exact = false;
  static bool is_zero(const cplx& x) { return x == cplx(0.0); }
};

inline Fp half(const Fp& x) { return x * inverse(Fp(2)); }
inline cplx half(const cplx& x) { return 0.5 * x; }

template <class S>
S random_element(Rng& rng);

template <>
inline Fp random_element<Fp>(Rng& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, Fp::modulus() - 1);
  return Fp::from_raw(d(rng));
}

template <>
inline cplx random_element<cplx>(Rng& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  double re = d(rng);
  return {re, d(rng)};
}

// standard complex normal coordinates (unit variance per component)
inline cplx random_normal(Rng& rng) {
  std::normal_distribution<double> d(0.0, 1.0);
  double re = d(rng);
  return {re, d(rng)};
}

// splitmix64 mixing of (master, a, b): per-task streams derived from one seed
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0);

}  // namespace octjordan

namespace Eigen {
template <>
struct NumTraits<octjordan::Fp> : GenericNumTraits<octjordan::Fp> {
  using Real = octjordan::Fp;
  using NonInteger = octjordan::Fp;
  using Literal = octjordan::Fp;
  using Nested = octjordan::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
