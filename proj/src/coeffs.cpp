#include <octjordan/coeffs.hpp>

#include <stdexcept>
#include <string>

namespace octjordan {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic for all 64-bit n with these bases
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void Fp::set_modulus(u64 p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("modulus must be an odd prime: " + std::to_string(p));
  p_ = p;
}

Fp& Fp::operator/=(Fp o) { return *this *= inverse(o); }

Fp pow(Fp x, std::uint64_t e) { return Fp::from_raw(powmod(x.value(), e, Fp::modulus())); }

Fp inverse(Fp x) {
  if (x == Fp(0)) throw std::domain_error("inverse of zero in F_p");
  return pow(x, Fp::modulus() - 2);
}

std::optional<Fp> field_sqrt(Fp x) {
  const u64 p = Fp::modulus();
  if (x == Fp(0)) return Fp(0);
  if (pow(x, (p - 1) / 2) != Fp(1)) return std::nullopt;
  if (p % 4 == 3) return pow(x, (p + 1) / 4);
  // Tonelli-Shanks
  u64 q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  Fp z(2);
  while (pow(z, (p - 1) / 2) == Fp(1)) z += Fp(1);
  Fp c = pow(z, q), t = pow(x, q), r = pow(x, (q + 1) / 2);
  int m = s;
  while (t != Fp(1)) {
    int i = 0;
    Fp t2 = t;
    while (t2 != Fp(1)) {
      t2 *= t2;
      ++i;
    }
    Fp b = c;
    for (int k = 0; k < m - i - 1; ++k) b *= b;
    r *= b;
    c = b * b;
    t *= c;
    m = i;
  }
  return r;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
  auto mix = [](u64 z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(master) ^ a) ^ (b * 0xd6e8feb86659fd93ULL));
}

}  // namespace octjordan
