#pragma once

// Entanglement witnesses for two spins.
//
// F is the nonlinear functional 1/2 - (1+|<XX>|)(1+|<ZZ>|)/4 read off the
// superdense-coding magnetizations. W is the linear family
// c_I I + c_x XX + c_y YY + c_z ZZ; Table-1 rows are its optimal members
// for the four Bell states.

#include <array>
#include <string_view>
#include <vector>

#include "witnesslab/qmat.hpp"
#include "witnesslab/states.hpp"

namespace witnesslab {

/// (<X_I X_S>, <Z_I Z_S>).
struct CorrelationPair {
  double w1 = 0.0;
  double w2 = 0.0;
};

struct PauliWitness {
  double c_I = 0.0;
  double c_x = 0.0;
  double c_y = 0.0;
  double c_z = 0.0;

  friend bool operator==(const PauliWitness&, const PauliWitness&) = default;
};

enum class BDClass { Unphysical, Separable, EntangledDetectedByF, EntangledUndetectedByF };

std::string_view to_string(BDClass cls);

/// Throws DomainError when a correlation lies outside [-1, 1].
double f_witness(const CorrelationPair& corr);
double f_witness_state(const DensityMatrix& rho);
CorrelationPair correlations(const DensityMatrix& rho);

HermitianOp witness_matrix(const PauliWitness& w);
double eval_witness(const PauliWitness& w, const DensityMatrix& rho);
/// Expectation on a Bell-diagonal state without building the matrix.
double eval_witness(const PauliWitness& w, const BellDiagonalParams& c);
/// W^{T_A} >= 0 and W <= I within psd tolerance.
bool is_valid_witness(const PauliWitness& w, const Tolerances& tol = {});

/// Published optimal witness for a Bell state.
PauliWitness table1_witness(BellKind kind);

/// F < 0 on the Bell-diagonal state; throws DomainError if unphysical.
bool f_detects_bd(const BellDiagonalParams& c);
BDClass classify_bd(const BellDiagonalParams& c);

struct GridPoint {
  BellDiagonalParams c;
  BDClass cls;
};

/// resolution^3 points uniformly covering [-1,1]^3, c1 slowest.
std::vector<GridPoint> detection_region_grid(int resolution);

/// Three-way reading of a witness value. Values in [-noise, 0) are
/// inconclusive; predicates count them as not detected.
enum class Verdict { Detected, Inconclusive, NotDetected };

Verdict verdict(double witness_value, double noise = 1e-9);
std::string_view to_string(Verdict v);

}  // namespace witnesslab
