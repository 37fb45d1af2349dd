#pragma once

// Simulated NMR readout of a two-spin register.
//
// Each nucleus shows a doublet. Its two integrated line intensities combine
// as (a, b) = [[1, 1], [1, -1]] (low, high), where
//   a = Tr(rho U I- U^dag (x) I),   b = Tr(rho U I- U^dag (x) U Z U^dag),
// I- = X - iY sits on the observed nucleus and U is the preparatory pulse.
// Spectra are phased and scaled against the equilibrium signal acquired
// under the same pulse; a nucleus the pulse leaves untouched has no such
// signal and keeps the unit reference.

#include <complex>
#include <cstdint>
#include <optional>

#include "witnesslab/circuits.hpp"
#include "witnesslab/qmat.hpp"
#include "witnesslab/states.hpp"
#include "witnesslab/witness.hpp"

namespace witnesslab {

enum class PulseAxis { X, Y };

struct PulseSpec {
  PulseAxis axis = PulseAxis::Y;
  /// Radians, in (0, 2 pi).
  double angle = 0.0;
  bool on_I = false;
  bool on_S = false;
};

/// (pi/2)_y on the carbon: maps XX into the I antiphase line and ZZ into the S one.
PulseSpec xx_zz_reading_pulse();
/// (pi/2)_x on the carbon: maps YY into the imaginary part of the I spectrum.
PulseSpec yy_reading_pulse();

struct SpectrumPair {
  Qubit nucleus = Qubit::I;
  std::complex<double> line_low;
  std::complex<double> line_high;

  /// a = low + high.
  std::complex<double> in_phase() const { return line_low + line_high; }
  /// b = low - high.
  std::complex<double> antiphase() const { return line_low - line_high; }
};

/// exp(-i angle/2 sigma_axis) on each target spin.
Gate prep_pulse_unitary(const PulseSpec& p);

SpectrumPair simulate_lines(const DensityMatrix& rho, Qubit nucleus, const std::optional<PulseSpec>& prep);
/// Forward transform: lines from an (a, b) pair.
SpectrumPair lines_from_projections(Qubit nucleus, std::complex<double> a, std::complex<double> b);

/// w1 from Re(antiphase) of I, w2 from Re(antiphase) of S; both spectra
/// taken with xx_zz_reading_pulse().
CorrelationPair read_correlations(const SpectrumPair& spec_I, const SpectrumPair& spec_S);
/// Both spectra simulated and read in one go.
CorrelationPair measure_correlations(const DensityMatrix& rho);
/// <YY> from the imaginary antiphase signal of I under yy_reading_pulse().
double measure_yy(const DensityMatrix& rho);

struct TomographyResult {
  DensityMatrix state;
  /// Frobenius distance between the raw linear inversion and `state`.
  double projection_distance = 0.0;
};

/// Linear inversion rho = (I + sum e_k P_k)/4, then clipping of negative
/// eigenvalues and renormalization when the inversion is not PSD.
TomographyResult pauli_tomography(const PauliVector& expectations, const Tolerances& tol = {});

/// value + N(0, sigma) from a generator seeded with `seed`, clamped to [-1, 1].
double add_noise(double value, double sigma, std::uint64_t seed);
/// Independent noise on every component; component k uses a stream derived
/// from (seed, k).
PauliVector add_noise(const PauliVector& values, double sigma, std::uint64_t seed);

}  // namespace witnesslab
