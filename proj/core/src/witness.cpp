#include "witnesslab/witness.hpp"

#include <cmath>
#include <string>

#include "witnesslab/errors.hpp"

namespace witnesslab {

namespace {

constexpr double kCorrelationSlack = 1e-9;

}  // namespace

std::string_view to_string(BDClass cls) {
  switch (cls) {
    case BDClass::Unphysical: return "Unphysical";
    case BDClass::Separable: return "Separable";
    case BDClass::EntangledDetectedByF: return "EntangledDetectedByF";
    case BDClass::EntangledUndetectedByF: return "EntangledUndetectedByF";
  }
  return "?";
}

double f_witness(const CorrelationPair& corr) {
  for (double w : {corr.w1, corr.w2})
    if (!(std::abs(w) <= 1.0 + kCorrelationSlack))
      throw DomainError("correlation " + std::to_string(w) + " outside [-1, 1]");
  return 0.5 - 0.25 * (1.0 + std::abs(corr.w1)) * (1.0 + std::abs(corr.w2));
}

CorrelationPair correlations(const DensityMatrix& rho) {
  return {expectation(rho, pauli_string(Pauli::X, Pauli::X)),
          expectation(rho, pauli_string(Pauli::Z, Pauli::Z))};
}

double f_witness_state(const DensityMatrix& rho) { return f_witness(correlations(rho)); }

HermitianOp witness_matrix(const PauliWitness& w) {
  return w.c_I * HermitianOp::identity(4) + w.c_x * pauli_string(Pauli::X, Pauli::X) +
         w.c_y * pauli_string(Pauli::Y, Pauli::Y) + w.c_z * pauli_string(Pauli::Z, Pauli::Z);
}

double eval_witness(const PauliWitness& w, const DensityMatrix& rho) {
  return w.c_I + w.c_x * expectation(rho, pauli_string(Pauli::X, Pauli::X)) +
         w.c_y * expectation(rho, pauli_string(Pauli::Y, Pauli::Y)) +
         w.c_z * expectation(rho, pauli_string(Pauli::Z, Pauli::Z));
}

double eval_witness(const PauliWitness& w, const BellDiagonalParams& c) {
  return w.c_I + w.c_x * c.c1 + w.c_y * c.c2 + w.c_z * c.c3;
}

bool is_valid_witness(const PauliWitness& w, const Tolerances& tol) {
  const HermitianOp m = witness_matrix(w);
  return is_psd(partial_transpose(m), tol) && is_psd(HermitianOp::identity(4) - m, tol);
}

PauliWitness table1_witness(BellKind kind) {
  switch (kind) {
    case BellKind::PhiPlus: return {0.5, -0.5, 0.5, -0.5};
    case BellKind::PsiPlus: return {0.5, -0.5, -0.5, 0.5};
    case BellKind::PhiMinus: return {0.5, 0.5, -0.5, -0.5};
    case BellKind::PsiMinus: return {0.5, 0.5, 0.5, 0.5};
  }
  throw DomainError("unknown Bell kind");
}

bool f_detects_bd(const BellDiagonalParams& c) {
  bell_probabilities(c);
  return (1.0 + std::abs(c.c1)) * (1.0 + std::abs(c.c3)) > 2.0;
}

BDClass classify_bd(const BellDiagonalParams& c) {
  if (!is_physical_bd(c)) return BDClass::Unphysical;
  if (is_separable_bd(c)) return BDClass::Separable;
  return f_detects_bd(c) ? BDClass::EntangledDetectedByF : BDClass::EntangledUndetectedByF;
}

std::vector<GridPoint> detection_region_grid(int resolution) {
  if (resolution < 2) throw DomainError("grid resolution must be at least 2");
  const auto coord = [resolution](int i) { return -1.0 + 2.0 * i / (resolution - 1); };
  std::vector<GridPoint> out;
  out.reserve(static_cast<std::size_t>(resolution) * resolution * resolution);
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j < resolution; ++j)
      for (int k = 0; k < resolution; ++k) {
        const BellDiagonalParams c{coord(i), coord(j), coord(k)};
        out.push_back({c, classify_bd(c)});
      }
  return out;
}

Verdict verdict(double witness_value, double noise) {
  if (witness_value >= 0.0) return Verdict::NotDetected;
  return witness_value < -noise ? Verdict::Detected : Verdict::Inconclusive;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Detected: return "entangled (detected)";
    case Verdict::Inconclusive: return "inconclusive within numerical noise";
    case Verdict::NotDetected: return "not detected";
  }
  return "?";
}

}  // namespace witnesslab
