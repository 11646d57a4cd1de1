#pragma once

#include <octjordan/jordan.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace octjordan {

enum class Surface { sodm, cubic, sextic };
enum class BlockMatrix { M, N };

Surface parse_surface(const std::string& s);
BlockMatrix parse_matrix(const std::string& s);
std::string to_string(Surface s);
std::string to_string(BlockMatrix m);

int surface_degree(Surface s);
cplx surface_value(Surface s, const HermitianTriple<cplx>& A);

// Draws 26 unit-normal coordinates and solves for lambda3 in closed form.
// real_offdiag restricts a, b, c to multiples of e1.
HermitianTriple<cplx> sample_on(Surface s, Rng& rng, bool real_offdiag = false, int retries = 100);

// 24 minus the number of singular values above tol * sigma_max
int numeric_corank(const Mat<cplx>& X, double tol);

struct CorankCensus {
  Surface surface = Surface::sodm;
  BlockMatrix matrix = BlockMatrix::M;
  int samples = 0;
  double tol = 0.0;
  std::uint64_t seed = 0;
  std::string backend = "jacobi_svd";
  std::map<int, int> histogram;  // corank -> count
  int mode = -1;
  int well_separated = 0;  // samples whose singular-value gap at the rank cut is >= 1e4
  std::optional<HermitianTriple<cplx>> witness;  // first sample at the modal corank
  int witness_rank = -1;
};

CorankCensus corank_census(Surface s, BlockMatrix m, int samples, double tol, std::uint64_t seed, int jobs);

}  // namespace octjordan
