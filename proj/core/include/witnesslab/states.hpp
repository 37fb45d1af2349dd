#pragma once

// State families of a two-spin NMR register: thermal equilibrium,
// pseudo-pure mixtures, Bell states and the Bell-diagonal tetrahedron.

#include <array>
#include <string>
#include <string_view>

#include "witnesslab/qmat.hpp"

namespace witnesslab {

enum class BellKind { PhiPlus, PsiPlus, PhiMinus, PsiMinus };

inline constexpr std::array<BellKind, 4> kAllBellKinds = {BellKind::PhiPlus, BellKind::PsiPlus,
                                                          BellKind::PhiMinus, BellKind::PsiMinus};

/// "phi+", "psi+", "phi-", "psi-".
std::string_view to_string(BellKind kind);
/// Inverse of to_string; throws DomainError on anything else.
BellKind parse_bell_kind(std::string_view text);

/// Correlation triple (<XX>, <YY>, <ZZ>) of a Bell-diagonal state:
/// rho = (I + c1 XX + c2 YY + c3 ZZ) / 4.
struct BellDiagonalParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

/// Spin polarizations; p = (1+eps)/2 is the ground-state population.
struct ThermalParams {
  double eps_I = 0.0;
  double eps_S = 0.0;
};

/// Bell-basis weights ordered (PhiPlus, PsiPlus, PhiMinus, PsiMinus).
using BellWeights = std::array<double, 4>;

/// Normalized Bell vector, Phi+- = (|00> +- |11>)/sqrt2, Psi+- = (|01> +- |10>)/sqrt2.
std::array<Complex, 4> bell_vector(BellKind kind);
DensityMatrix bell_state(BellKind kind);
/// (<XX>, <YY>, <ZZ>) of the Bell state itself.
BellDiagonalParams bell_correlations(BellKind kind);

/// Bell weights without the physicality check (may be negative).
BellWeights bell_weights_unchecked(const BellDiagonalParams& c);
/// Throws DomainError when any weight is below -1e-9.
BellWeights bell_probabilities(const BellDiagonalParams& c);
bool is_physical_bd(const BellDiagonalParams& c);
DensityMatrix bell_diagonal(const BellDiagonalParams& c);
/// Octahedron |c1|+|c2|+|c3| <= 1; boundary counts as separable.
bool is_separable_bd(const BellDiagonalParams& c);

DensityMatrix thermal_state(const ThermalParams& params);
/// (1-eps) I/4 + eps rho1.
DensityMatrix pseudo_pure(double eps, const DensityMatrix& rho1);

/// Positive partial transpose; the exact separability test for two qubits.
bool is_ppt(const DensityMatrix& rho, const Tolerances& tol = {});

/// Two-qubit Pauli strings in lexicographic order IX, IY, IZ, XI, XX, ..., ZZ.
using PauliVector = std::array<double, 15>;

/// Factors (on_I, on_S) of slot k of a PauliVector.
std::array<Pauli, 2> pauli_vector_slot(int k);
/// "IX", "IY", ..., "ZZ".
std::string pauli_vector_label(int k);

PauliVector pauli_vector(const DensityMatrix& rho);
/// (I + sum_k v_k P_k) / 4. Unit trace and Hermitian, but not necessarily PSD.
HermitianOp from_pauli_vector(const PauliVector& v);

}  // namespace witnesslab
