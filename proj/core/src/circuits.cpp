#include "witnesslab/circuits.hpp"

#include <cmath>

#include "witnesslab/errors.hpp"

namespace witnesslab {

namespace {

constexpr double kGrapeGroundWeight = 0.6;

}  // namespace

Gate::Gate(ComplexMatrix unitary, std::string label, const Tolerances& tol)
    : u_(std::move(unitary)), label_(std::move(label)) {
  const ComplexMatrix check = u_.adjoint() * u_;
  if (!check.approx_equal(ComplexMatrix::identity(u_.dim()), tol.eq))
    throw StructuralError("gate '" + label_ + "' is not unitary");
}

Gate Gate::inverse() const { return Gate(u_.adjoint(), label_ + "^dag"); }

DensityMatrix Gate::apply(const DensityMatrix& rho) const {
  if (rho.dim() != dim()) throw StructuralError("gate and state dimensions differ");
  ComplexMatrix out = u_ * rho.matrix() * u_.adjoint();
  // Products of exact unitaries drift from Hermiticity at round-off level.
  out = (out + out.adjoint()) * Complex(0.5);
  return DensityMatrix(out);
}

HermitianOp Gate::conjugate(const HermitianOp& op) const {
  if (op.dim() != dim()) throw StructuralError("gate and operator dimensions differ");
  ComplexMatrix out = u_ * op.matrix() * u_.adjoint();
  out = (out + out.adjoint()) * Complex(0.5);
  return HermitianOp(out);
}

std::array<Complex, 4> Gate::apply(const std::array<Complex, 4>& psi) const { return u_.apply(psi); }

Gate operator*(const Gate& a, const Gate& b) {
  return Gate(a.unitary() * b.unitary(), a.label() + "*" + b.label());
}

Gate hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  return Gate(ComplexMatrix(2, {h, h, h, -h}), "H");
}

Gate cnot() {
  return Gate(ComplexMatrix(4, {1, 0, 0, 0,  //
                                0, 1, 0, 0,  //
                                0, 0, 0, 1,  //
                                0, 0, 1, 0}),
              "CNOT");
}

Gate on_qubit(const Gate& g, Qubit q) {
  if (g.dim() != 2) throw StructuralError("on_qubit expects a single-qubit gate");
  const ComplexMatrix id = ComplexMatrix::identity(2);
  const std::string tag = q == Qubit::I ? "_I" : "_S";
  return Gate(q == Qubit::I ? kron(g.unitary(), id) : kron(id, g.unitary()), g.label() + tag);
}

Gate epr_gate() { return Gate(cnot().unitary() * on_qubit(hadamard(), Qubit::I).unitary(), "EPR"); }

Gate pseudo_epr() {
  const Gate x_on_I = on_qubit(Gate(pauli(Pauli::X).matrix(), "X"), Qubit::I);
  return Gate(epr_gate().unitary() * x_on_I.unitary(), "pseudo-EPR");
}

Gate message_operator(const Message& m) {
  if ((m.x != 0 && m.x != 1) || (m.z != 0 && m.z != 1))
    throw DomainError("message bits must be 0 or 1");
  ComplexMatrix u = ComplexMatrix::identity(2);
  if (m.z) u = pauli(Pauli::Z).matrix() * u;
  if (m.x) u = pauli(Pauli::X).matrix() * u;
  return on_qubit(Gate(u, "M" + std::to_string(m.x) + std::to_string(m.z)), Qubit::I);
}

SuperdenseRun superdense_run(const ThermalParams& thermal, const Message& m) {
  const Gate epr = epr_gate();
  const DensityMatrix rho1 = epr.apply(thermal_state(thermal));
  const DensityMatrix rho_f = epr.inverse().apply(message_operator(m).apply(rho1));
  return SuperdenseRun{rho1, rho_f, expectation(rho_f, pauli_string(Pauli::Z, Pauli::I)),
                       expectation(rho_f, pauli_string(Pauli::I, Pauli::Z))};
}

std::optional<Message> decode_message(double mz_I, double mz_S, double tol) {
  if (std::abs(mz_I) <= tol || std::abs(mz_S) <= tol) return std::nullopt;
  // <Z_I> carries z, <Z_S> carries x.
  return Message{mz_S < 0 ? 1 : 0, mz_I < 0 ? 1 : 0};
}

Gate grape_unitary() {
  const double c = std::sqrt(kGrapeGroundWeight);
  const double s = std::sqrt(1.0 - kGrapeGroundWeight);
  return Gate(ComplexMatrix(4, {c, 0, 0, -s,  //
                                0, 1, 0, 0,   //
                                0, 0, 1, 0,   //
                                s, 0, 0, c}),
              "GRAPE");
}

DensityMatrix dephase(const DensityMatrix& rho) {
  ComplexMatrix out(rho.dim());
  for (int k = 0; k < rho.dim(); ++k) out(k, k) = rho(k, k);
  return DensityMatrix(out);
}

DensityMatrix grape_target_pipeline() {
  const DensityMatrix ground = DensityMatrix::pure({1.0, 0.0, 0.0, 0.0});
  return pseudo_epr().apply(dephase(grape_unitary().apply(ground)));
}

}  // namespace witnesslab
