#pragma once

#include <octjordan/jordan.hpp>
#include <octjordan/linalg.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace octjordan {

struct TrialFailure {
  int trial = 0;
  std::vector<std::string> point;  // sampled coordinates, decimal residues
  std::string defect;
  bool operator==(const TrialFailure&) const = default;
};

struct SubCheckReport {
  std::string name;
  int degree = 0;  // degree of the defect polynomial in the sampled coordinates
  int trials_run = 0;
  bool passed = true;
  std::optional<std::string> warning;
  std::optional<TrialFailure> failure;
  double failure_bound = 0.0;  // trials * degree / p
  std::map<int, int> histogram;  // per-check tags (e.g. ranks), empty for most checks
  bool operator==(const SubCheckReport&) const = default;
};

struct CheckReport {
  std::string id, title;
  std::vector<SubCheckReport> subs;
  bool passed() const;
  bool operator==(const CheckReport&) const = default;
};

struct SuiteReport {
  std::uint64_t prime = 0, seed = 0;
  int trials = 0;
  int max_degree = 0;
  std::vector<CheckReport> checks;
  bool passed() const;
  bool operator==(const SuiteReport&) const = default;
};

std::vector<std::string> check_ids();

// Runs the selected checks (all when empty) in registry order. Sets the modulus
// for the duration of the call; a failing trial stops its sub-check.
SuiteReport run_suite(std::uint64_t prime, std::uint64_t seed, int trials,
                      const std::vector<std::string>& checks = {}, int jobs = 1);

// rank(L_a L_b R_c + R_c^T L_b^T L_a^T - 2 Re(conj(c)(ba)) I)
template <class S>
int multiplicity_defect(const Vec<S>& a, const Vec<S>& b, const Vec<S>& c) {
  const Mat<S> op = left_mult_matrix(a) * left_mult_matrix(b) * right_mult_matrix(c);
  const S shift = S(2) * real_part(multiply(conjugate(c), multiply(b, a)));
  return rank(Mat<S>(op + op.transpose() - shift * Mat<S>::Identity(8, 8)));
}

// det(k I - (L_a L_b L_c + L_c^T L_b^T L_a^T))
Fp charpoly_lhs(const Vec<Fp>& a, const Vec<Fp>& b, const Vec<Fp>& c, Fp k);
// (k - 2 Re(c(ab))) (k - 2 Re(c(ba))) - |[c,b,a]|^2
Fp charpoly_factor(const Vec<Fp>& a, const Vec<Fp>& b, const Vec<Fp>& c, Fp k);

struct CharpolyResult {
  bool calibrated = false;  // exponent 4, unit scalar at a = b = c = e1
  bool passed = false;
  bool exponent_warning = false;  // matched with a different power only
  int trials = 0;
};

CharpolyResult charpoly_factor_check(Rng& rng, int trials);

}  // namespace octjordan
