#pragma once

// Optimization kernel: exact witness optimization as a small linear program
// and the generalized robustness of entanglement of a two-qubit state.

#include <optional>
#include <vector>

#include "witnesslab/qmat.hpp"
#include "witnesslab/states.hpp"
#include "witnesslab/witness.hpp"

namespace witnesslab {

/// minimize objective . x  subject to  constraints[i] . x <= bounds[i].
struct LinearProgram {
  std::vector<double> objective;
  std::vector<std::vector<double>> constraints;
  std::vector<double> bounds;
};

struct LpSolution {
  std::vector<double> x;
  double objective = 0.0;
};

/// Exhaustive vertex enumeration. Among optimal vertices the
/// lexicographically largest x is returned. Throws InfeasibleError or
/// UnboundedError.
LpSolution solve_lp(const LinearProgram& lp);

struct OptimalWitness {
  PauliWitness witness;
  /// <beta|W|beta> for the target Bell state.
  double objective = 0.0;
};

/// The LP whose optimum is the best witness for `kind` within the
/// c_I I + c_x XX + c_y YY + c_z ZZ family.
LinearProgram witness_program(BellKind kind);
OptimalWitness optimal_witness(BellKind kind);

struct RobustnessOptions {
  /// Target duality gap of the barrier solver.
  double gap = 1e-8;
  int max_newton_steps = 2000;
  Tolerances tol;
};

struct RobustnessResult {
  /// min Tr(omega) over omega >= 0 with (rho + omega)^{T_A} >= 0.
  double value = 0.0;
  /// Certified lower bound from the dual witness.
  double lower_bound = 0.0;
  /// omega / Tr(omega) when value > 0.
  std::optional<DensityMatrix> certificate_state;
  /// Dual witness W with W^{T_A} >= 0, W <= I and -Tr(W rho) = lower_bound.
  std::optional<HermitianOp> witness;
  int iterations = 0;

  /// Smallest eigenvalue of ((rho + value * certificate) / (1 + value))^{T_A};
  /// >= -psd when the certificate is feasible.
  double certificate_residual(const DensityMatrix& rho) const;
};

/// Exact for two qubits by the PPT criterion. Throws ConvergenceError with
/// the best bracket when the Newton budget runs out.
RobustnessResult generalized_robustness(const DensityMatrix& rho, const RobustnessOptions& opts = {});

/// Closed form max(0, 2 lambda_max - 1) for Bell-diagonal states.
double gr_oracle_bd(const BellDiagonalParams& c);

/// Sum of |negative eigenvalues| of rho^{T_A}.
double negativity(const DensityMatrix& rho);

}  // namespace witnesslab
