#pragma once

// Gate-level model of NMR superdense coding and of the GRAPE-based
// preparation of a Bell-diagonal target.

#include <optional>
#include <string>

#include "witnesslab/qmat.hpp"
#include "witnesslab/states.hpp"

namespace witnesslab {

/// Unitary with a display label. Construction checks U^dagger U = I.
class Gate {
 public:
  Gate(ComplexMatrix unitary, std::string label, const Tolerances& tol = {});

  const ComplexMatrix& unitary() const noexcept { return u_; }
  const std::string& label() const noexcept { return label_; }
  int dim() const noexcept { return u_.dim(); }

  Gate inverse() const;
  /// U rho U^dagger.
  DensityMatrix apply(const DensityMatrix& rho) const;
  HermitianOp conjugate(const HermitianOp& op) const;
  std::array<Complex, 4> apply(const std::array<Complex, 4>& psi) const;

  /// Gate product: (a * b) applies b first.
  friend Gate operator*(const Gate& a, const Gate& b);

 private:
  ComplexMatrix u_;
  std::string label_;
};

/// Two classical bits carried by the message operator X^x Z^z on qubit I.
struct Message {
  int x = 0;
  int z = 0;
};

Gate hadamard();
/// Control on qubit I, target on qubit S.
Gate cnot();
/// Single-qubit gate lifted to the register.
Gate on_qubit(const Gate& g, Qubit q);

/// CNOT (H x I): |00> -> Phi+.
Gate epr_gate();
/// Bell permutation |00> -> Phi-, |01> -> Psi-, |10> -> Phi+, |11> -> Psi+,
/// equal to epr_gate() composed after X on qubit I.
Gate pseudo_epr();
/// (X^x Z^z) on qubit I.
Gate message_operator(const Message& m);

struct SuperdenseRun {
  DensityMatrix rho1;   ///< shared pair after the EPR gate
  DensityMatrix rho_f;  ///< state after message and decoding
  double mz_I = 0.0;    ///< <Z (x) I> on rho_f
  double mz_S = 0.0;    ///< <I (x) Z> on rho_f
};

SuperdenseRun superdense_run(const ThermalParams& thermal, const Message& m);

/// Decoded message from magnetization signs; nullopt when either
/// magnetization lies within `tol` of zero.
std::optional<Message> decode_message(double mz_I, double mz_S, double tol = 1e-12);

/// Rotation in the {|00>, |11>} plane taking |00> to sqrt(0.6)|00> + sqrt(0.4)|11>.
Gate grape_unitary();
/// Ideal gradient crusher: drop every off-diagonal element.
DensityMatrix dephase(const DensityMatrix& rho);
/// grape_unitary on |00>, dephase, then pseudo_epr.
DensityMatrix grape_target_pipeline();

}  // namespace witnesslab
