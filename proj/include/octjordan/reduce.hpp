#pragma once

#include <octjordan/symmetry.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace octjordan {

// A genericity condition of the reduction failed.
struct NonGeneric : std::runtime_error {
  NonGeneric(int step, std::string quantity, double value)
      : std::runtime_error("non-generic input at step " + std::to_string(step) + ": " + quantity + " = " +
                           std::to_string(value)),
        step(step),
        quantity(std::move(quantity)),
        value(value) {}
  int step;
  std::string quantity;
  double value;
};

struct Move {
  enum class Kind { triality, congruence };
  Kind kind = Kind::congruence;
  TrialityTriple<cplx> t;  // triality moves
  Mat<cplx> H;             // congruence moves: A -> H^T A H
};

HermitianTriple<cplx> apply_move(const Move& m, const HermitianTriple<cplx>& A);

struct TransformWord {
  HermitianTriple<cplx> input, final_state;
  std::vector<Move> moves;
  cplx scalar = 1.0;  // trailing C* factor, applied after the moves
  std::vector<std::pair<std::string, HermitianTriple<cplx>>> states;  // A1..A11 as reached
  double residual = 0.0;         // |final_state - I|
  double replay_residual = 0.0;  // |replay(word, input) - I|
  double max_triality_defect = 0.0;
  double max_triality_invariant_drift = 0.0;  // relative change of cubic / sextic across Spin7 moves

  const HermitianTriple<cplx>* state(const std::string& label) const;
};

HermitianTriple<cplx> replay(const TransformWord& w, const HermitianTriple<cplx>& A);

// H with H^T S H = I by completion of squares, pivoting on the largest |v^T S v|
Mat<cplx> symmetric_congruence_to_identity(const Mat<cplx>& S);

// Rotation of Im(c) onto the line of u (imaginary, non-isotropic), lifted to Spin7
std::pair<TrialityTriple<cplx>, HermitianTriple<cplx>> move_c_to_plane(const HermitianTriple<cplx>& A,
                                                                        const Vec<cplx>& u, int step = 1);

// (T x - target) restricted to `rows` (all coordinates when empty), T = T1 or T2 by slot
struct Constraint {
  int slot = 1;
  Vec<cplx> x, target;
  std::vector<int> rows;
};

struct SteerResult {
  TrialityTriple<cplx> g;
  int iterations = 0, restarts = 0;
  double residual = 0.0;
};

// Newton on the Spin7 copy: left updates by exp of the 21 linearised generators.
SteerResult stabilizer_solve(const std::vector<Constraint>& cs, int step = 0, int max_iters = 50,
                             int max_restarts = 20);

TransformWord reduce_to_identity(const HermitianTriple<cplx>& A, double tol);

double distance_to_identity(const HermitianTriple<cplx>& A);

}  // namespace octjordan
