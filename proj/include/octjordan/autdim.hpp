#pragma once

#include <octjordan/cayley.hpp>
#include <octjordan/poly.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace octjordan {

inline constexpr int kJordanDim = 27;
inline constexpr int kRestrictDim = 6;

// S_ODM in the 27 flat coordinates (c, b, a, lambda) over the current F_p,
// with |[c,b,a]|^2 taken through the Gram determinant. Cached per modulus.
const SparsePoly& expand_sodm();

std::vector<SparsePoly> gradient(const SparsePoly& p, int nvars = kJordanDim);

// Substitutes x_i = sum_j m(i,j) z_j into a form of the given degree;
// dense coefficients in monomials_grlex(m.cols(), degree) order.
std::vector<Fp> restrict_linear(const SparsePoly& p, const Mat<Fp>& m, int degree);

// rank of the products z_j * (dS/dx_i o m) in the degree-6 forms in z
int jacobian_image_rank(const Mat<Fp>& m);

struct AutDimReport {
  std::uint64_t prime = 0, seed = 0;
  int retries = 0;
  std::vector<int> ranks;
  std::optional<int> max_rank, bound;  // empty when no retry ran
  std::size_t term_count = 0;
  int rows = 0, cols = 0;
};

// Sets the modulus for the duration of the call.
AutDimReport aut_dimension_bound(std::uint64_t prime, std::uint64_t seed, int retries, int jobs);

}  // namespace octjordan
