#pragma once

// Phenomenological T1/T2 relaxation of two spins and the time sweeps that
// follow F, W and the generalized robustness as entanglement decays.

#include <optional>
#include <vector>

#include "witnesslab/optim.hpp"
#include "witnesslab/qmat.hpp"
#include "witnesslab/witness.hpp"

namespace witnesslab {

/// Per-spin time constants in seconds. Construction enforces 0 < T2 <= 2 T1.
class RelaxationParams {
 public:
  static constexpr double kDefaultT1 = 10.0;

  RelaxationParams(double t1_I, double t2_I, double t1_S, double t2_S);
  /// T2 values only; T1 defaults to kDefaultT1.
  static RelaxationParams from_t2(double t2_I, double t2_S);

  double t1_I() const noexcept { return t1_I_; }
  double t2_I() const noexcept { return t2_I_; }
  double t1_S() const noexcept { return t1_S_; }
  double t2_S() const noexcept { return t2_S_; }

 private:
  double t1_I_, t2_I_, t1_S_, t2_S_;
};

/// Independent amplitude damping toward I/2 (rate 1/T1) followed by pure
/// dephasing, per spin, so that transverse components decay at 1/T2.
DensityMatrix relax_channel(const DensityMatrix& rho, double t, const RelaxationParams& p);

/// Kraus operators of the single-spin channel at time t.
std::vector<ComplexMatrix> single_spin_kraus(double t, double t1, double t2);

enum class SweepQuantity { F, W, GR };

struct SweepSeries {
  std::vector<double> times;
  std::vector<double> f_values;
  std::vector<double> w_values;
  std::vector<double> gr_values;
  /// First zero crossing of F.
  std::optional<double> tau_c;
  /// 1/e times fitted to the GR curve and to |W - 1/2|.
  std::optional<double> tau_R;
  std::optional<double> tau_W;
};

/// Threshold below which the robustness counts as vanished.
inline constexpr double kRobustnessFloor = 1e-6;
/// Equilibrium value of a Table-1 witness (c_I of every row).
inline constexpr double kWitnessAsymptote = 0.5;

/// Uniform grid of `steps` points on [0, t_max].
SweepSeries sweep(const DensityMatrix& rho0, const RelaxationParams& p, const PauliWitness& w, double t_max,
                  int steps, const RobustnessOptions& opts = {});

/// Linear interpolation of the first sign change (F, W) or the first
/// descent below kRobustnessFloor (GR).
std::optional<double> crossing_time(const SweepSeries& series, SweepQuantity quantity);
/// Same rule on a bare (times, values) pair.
std::optional<double> crossing_time(const std::vector<double>& times, const std::vector<double>& values,
                                    SweepQuantity quantity);

/// Least-squares fit of A exp(-t/tau) over points above 1e-3 of the first
/// value's magnitude. nullopt when fewer than two points qualify or the
/// data does not decay.
std::optional<double> fit_decay_time(const std::vector<double>& times, const std::vector<double>& values);

}  // namespace witnesslab
