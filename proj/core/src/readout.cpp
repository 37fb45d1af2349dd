#include "witnesslab/readout.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "witnesslab/errors.hpp"

namespace witnesslab {

namespace {

constexpr double kNoReference = 1e-9;

ComplexMatrix lowering_like() {
  const Complex i{0.0, 1.0};
  return pauli(Pauli::X).matrix() - i * pauli(Pauli::Y).matrix();
}

ComplexMatrix place(const ComplexMatrix& observed, const ComplexMatrix& partner, Qubit nucleus) {
  return nucleus == Qubit::I ? kron(observed, partner) : kron(partner, observed);
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) { return (a * b).trace(); }

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

PulseSpec xx_zz_reading_pulse() { return {PulseAxis::Y, std::numbers::pi / 2, false, true}; }

PulseSpec yy_reading_pulse() { return {PulseAxis::X, std::numbers::pi / 2, false, true}; }

Gate prep_pulse_unitary(const PulseSpec& p) {
  if (!(p.angle > 0.0 && p.angle < 2.0 * std::numbers::pi))
    throw DomainError("pulse angle must lie in (0, 2 pi)");
  const double c = std::cos(p.angle / 2.0);
  const double s = std::sin(p.angle / 2.0);
  const Complex i{0.0, 1.0};
  // exp(-i theta/2 sigma) = cos I - i sin sigma
  const ComplexMatrix rot = p.axis == PulseAxis::X ? ComplexMatrix(2, {c, -i * s, -i * s, c})
                                                   : ComplexMatrix(2, {c, -s, s, c});
  const ComplexMatrix id = ComplexMatrix::identity(2);
  const char axis = p.axis == PulseAxis::X ? 'x' : 'y';
  return Gate(kron(p.on_I ? rot : id, p.on_S ? rot : id), std::string("pulse_") + axis);
}

SpectrumPair lines_from_projections(Qubit nucleus, std::complex<double> a, std::complex<double> b) {
  return {nucleus, (a + b) / 2.0, (a - b) / 2.0};
}

SpectrumPair simulate_lines(const DensityMatrix& rho, Qubit nucleus, const std::optional<PulseSpec>& prep) {
  if (rho.dim() != 4) throw StructuralError("spectra need a two-spin state");
  const ComplexMatrix u = prep ? prep_pulse_unitary(*prep).unitary() : ComplexMatrix::identity(4);
  const auto transformed = [&u](const ComplexMatrix& op) { return u * op * u.adjoint(); };

  const ComplexMatrix in_phase_op = transformed(place(lowering_like(), ComplexMatrix::identity(2), nucleus));
  const ComplexMatrix antiphase_op = transformed(place(lowering_like(), pauli(Pauli::Z).matrix(), nucleus));

  Complex a = trace_of_product(rho.matrix(), in_phase_op);
  Complex b = trace_of_product(rho.matrix(), antiphase_op);

  // Equilibrium reference: fully polarized |00> read under the same pulse.
  const ComplexMatrix equilibrium = ComplexMatrix::diagonal({1.0, 0.0, 0.0, 0.0});
  const Complex reference = trace_of_product(equilibrium, in_phase_op);
  if (std::abs(reference) > kNoReference) {
    a /= reference;
    b /= reference;
  }
  return lines_from_projections(nucleus, a, b);
}

CorrelationPair read_correlations(const SpectrumPair& spec_I, const SpectrumPair& spec_S) {
  if (spec_I.nucleus != Qubit::I || spec_S.nucleus != Qubit::S)
    throw StructuralError("read_correlations expects the I spectrum then the S spectrum");
  return {spec_I.antiphase().real(), spec_S.antiphase().real()};
}

CorrelationPair measure_correlations(const DensityMatrix& rho) {
  const PulseSpec pulse = xx_zz_reading_pulse();
  return read_correlations(simulate_lines(rho, Qubit::I, pulse), simulate_lines(rho, Qubit::S, pulse));
}

double measure_yy(const DensityMatrix& rho) {
  return simulate_lines(rho, Qubit::I, yy_reading_pulse()).antiphase().imag();
}

TomographyResult pauli_tomography(const PauliVector& expectations, const Tolerances& tol) {
  for (double e : expectations)
    if (!(std::abs(e) <= 1.0 + tol.eq)) throw DomainError("Pauli expectation outside [-1, 1]");
  const HermitianOp raw = from_pauli_vector(expectations);
  const Spectrum sp = eig_hermitian(raw);
  if (sp.min() >= -tol.psd) {
    // Clip round-off negatives so the DensityMatrix check sees a clean state.
    return {DensityMatrix(raw, Tolerances{tol.eq, std::max(tol.psd, 1e-9)}), 0.0};
  }
  double total = 0.0;
  for (int k = 0; k < sp.dim; ++k) total += std::max(sp.eigenvalues[k], 0.0);
  ComplexMatrix fixed = spectral_map(sp, [total](double x) { return std::max(x, 0.0) / total; });
  fixed = (fixed + fixed.adjoint()) * Complex(0.5);
  const double distance = (fixed - raw.matrix()).norm();
  return {DensityMatrix(fixed), distance};
}

double add_noise(double value, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0)) throw DomainError("noise sigma must be non-negative");
  if (sigma == 0.0) return value;
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, sigma);
  return std::clamp(value + normal(gen), -1.0, 1.0);
}

PauliVector add_noise(const PauliVector& values, double sigma, std::uint64_t seed) {
  PauliVector out{};
  for (std::size_t k = 0; k < values.size(); ++k) out[k] = add_noise(values[k], sigma, mix_seed(seed, k));
  return out;
}

}  // namespace witnesslab
