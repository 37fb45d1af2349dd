#pragma once

namespace witnesslab {

/// Numerical tolerances shared by every module. Pass a tightened copy to
/// any operation that accepts one.
struct Tolerances {
  /// Elementwise equality, Hermiticity and trace checks.
  double eq = 1e-10;
  /// Smallest eigenvalue still accepted as positive semidefinite.
  double psd = 1e-9;
};

}  // namespace witnesslab
