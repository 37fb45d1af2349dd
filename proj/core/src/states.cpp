#include "witnesslab/states.hpp"

#include <algorithm>
#include <cmath>

#include "witnesslab/errors.hpp"

namespace witnesslab {

namespace {

constexpr double kPhysicalSlack = 1e-9;
constexpr double kOctahedronSlack = 1e-12;

}  // namespace

std::string_view to_string(BellKind kind) {
  switch (kind) {
    case BellKind::PhiPlus: return "phi+";
    case BellKind::PsiPlus: return "psi+";
    case BellKind::PhiMinus: return "phi-";
    case BellKind::PsiMinus: return "psi-";
  }
  return "?";
}

BellKind parse_bell_kind(std::string_view text) {
  for (BellKind k : kAllBellKinds)
    if (to_string(k) == text) return k;
  throw DomainError("unknown Bell state '" + std::string(text) + "' (expected phi+, psi+, phi-, psi-)");
}

std::array<Complex, 4> bell_vector(BellKind kind) {
  const double h = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case BellKind::PhiPlus: return {h, 0.0, 0.0, h};
    case BellKind::PsiPlus: return {0.0, h, h, 0.0};
    case BellKind::PhiMinus: return {h, 0.0, 0.0, -h};
    case BellKind::PsiMinus: return {0.0, h, -h, 0.0};
  }
  throw DomainError("unknown Bell kind");
}

DensityMatrix bell_state(BellKind kind) { return DensityMatrix::pure(bell_vector(kind)); }

BellDiagonalParams bell_correlations(BellKind kind) {
  switch (kind) {
    case BellKind::PhiPlus: return {1.0, -1.0, 1.0};
    case BellKind::PsiPlus: return {1.0, 1.0, -1.0};
    case BellKind::PhiMinus: return {-1.0, 1.0, 1.0};
    case BellKind::PsiMinus: return {-1.0, -1.0, -1.0};
  }
  throw DomainError("unknown Bell kind");
}

BellWeights bell_weights_unchecked(const BellDiagonalParams& c) {
  return {(1.0 + c.c1 - c.c2 + c.c3) / 4.0, (1.0 + c.c1 + c.c2 - c.c3) / 4.0,
          (1.0 - c.c1 + c.c2 + c.c3) / 4.0, (1.0 - c.c1 - c.c2 - c.c3) / 4.0};
}

bool is_physical_bd(const BellDiagonalParams& c) {
  const BellWeights w = bell_weights_unchecked(c);
  return *std::min_element(w.begin(), w.end()) >= -kPhysicalSlack;
}

BellWeights bell_probabilities(const BellDiagonalParams& c) {
  const BellWeights w = bell_weights_unchecked(c);
  for (int k = 0; k < 4; ++k)
    if (w[k] < -kPhysicalSlack)
      throw DomainError("unphysical Bell-diagonal parameters: weight of " +
                        std::string(to_string(kAllBellKinds[k])) + " is " + std::to_string(w[k]));
  return w;
}

DensityMatrix bell_diagonal(const BellDiagonalParams& c) {
  bell_probabilities(c);
  HermitianOp rho = HermitianOp::identity(4) + c.c1 * pauli_string(Pauli::X, Pauli::X) +
                    c.c2 * pauli_string(Pauli::Y, Pauli::Y) + c.c3 * pauli_string(Pauli::Z, Pauli::Z);
  return DensityMatrix(rho * 0.25);
}

bool is_separable_bd(const BellDiagonalParams& c) {
  return std::abs(c.c1) + std::abs(c.c2) + std::abs(c.c3) <= 1.0 + kOctahedronSlack;
}

DensityMatrix thermal_state(const ThermalParams& params) {
  for (double eps : {params.eps_I, params.eps_S})
    if (eps < 0.0 || eps > 1.0) throw DomainError("polarization must lie in [0, 1]");
  const double pI = (1.0 + params.eps_I) / 2.0;
  const double qI = (1.0 - params.eps_I) / 2.0;
  const double pS = (1.0 + params.eps_S) / 2.0;
  const double qS = (1.0 - params.eps_S) / 2.0;
  return DensityMatrix(ComplexMatrix::diagonal({pI * pS, pI * qS, qI * pS, qI * qS}));
}

DensityMatrix pseudo_pure(double eps, const DensityMatrix& rho1) {
  if (eps < 0.0 || eps > 1.0) throw DomainError("pseudo-pure weight must lie in [0, 1]");
  if (rho1.dim() != 4) throw StructuralError("pseudo-pure state needs a two-qubit rho1");
  return DensityMatrix(HermitianOp::identity(4) * ((1.0 - eps) / 4.0) + rho1.op() * eps);
}

bool is_ppt(const DensityMatrix& rho, const Tolerances& tol) {
  return is_psd(partial_transpose(rho.op()), tol);
}

std::array<Pauli, 2> pauli_vector_slot(int k) {
  if (k < 0 || k >= 15) throw StructuralError("Pauli vector slot out of range");
  constexpr std::array<Pauli, 4> order = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
  const int code = k + 1;
  return {order[code / 4], order[code % 4]};
}

std::string pauli_vector_label(int k) {
  constexpr std::string_view letters = "IXYZ";
  const int code = k + 1;
  return {letters[code / 4], letters[code % 4]};
}

PauliVector pauli_vector(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw StructuralError("Pauli vector needs a two-qubit state");
  PauliVector v{};
  for (int k = 0; k < 15; ++k) {
    const auto [a, b] = pauli_vector_slot(k);
    v[k] = expectation(rho, pauli_string(a, b));
  }
  return v;
}

HermitianOp from_pauli_vector(const PauliVector& v) {
  HermitianOp out = HermitianOp::identity(4);
  for (int k = 0; k < 15; ++k) {
    const auto [a, b] = pauli_vector_slot(k);
    out += v[k] * pauli_string(a, b);
  }
  return out * 0.25;
}

}  // namespace witnesslab
