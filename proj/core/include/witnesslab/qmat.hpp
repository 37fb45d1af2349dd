#pragma once

// Dense complex matrices of dimension 2 (one qubit) and 4 (two qubits).
//
// Qubit I is always the left (slow) tensor factor: basis index = 2*i + s.

#include <array>
#include <complex>
#include <initializer_list>
#include <string>

#include "witnesslab/tolerances.hpp"

namespace witnesslab {

using Complex = std::complex<double>;

/// Which spin of the two-qubit register.
enum class Qubit { I, S };

/// Row-major complex matrix with dim in {2, 4}.
class ComplexMatrix {
 public:
  static constexpr int kMaxDim = 4;

  /// dim x dim zero matrix. Throws StructuralError unless dim is 2 or 4.
  explicit ComplexMatrix(int dim = 4);
  /// Row-major entries; size must be dim*dim.
  ComplexMatrix(int dim, std::initializer_list<Complex> entries);

  static ComplexMatrix identity(int dim);
  static ComplexMatrix diagonal(std::initializer_list<double> values);
  /// |v><v| for a column vector of length dim.
  static ComplexMatrix outer(const std::array<Complex, kMaxDim>& v, int dim);

  int dim() const noexcept { return dim_; }

  Complex& operator()(int row, int col) { return data_[index(row, col)]; }
  const Complex& operator()(int row, int col) const { return data_[index(row, col)]; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  /// Frobenius norm.
  double norm() const;
  /// Largest elementwise |a - b|.
  double max_abs_diff(const ComplexMatrix& other) const;
  bool approx_equal(const ComplexMatrix& other, double tol = Tolerances{}.eq) const;
  bool is_hermitian(double tol = Tolerances{}.eq) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex s) { return lhs *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix rhs) { return rhs *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

  /// Matrix-vector product on the first dim() entries.
  std::array<Complex, kMaxDim> apply(const std::array<Complex, kMaxDim>& v) const;

 private:
  int index(int row, int col) const { return row * dim_ + col; }

  int dim_;
  std::array<Complex, kMaxDim * kMaxDim> data_{};
};

/// Hermitian operator. Construction rejects non-Hermitian input instead of
/// symmetrizing it.
class HermitianOp {
 public:
  explicit HermitianOp(ComplexMatrix m, const Tolerances& tol = {});

  static HermitianOp identity(int dim) { return HermitianOp(ComplexMatrix::identity(dim)); }

  const ComplexMatrix& matrix() const noexcept { return m_; }
  int dim() const noexcept { return m_.dim(); }
  double trace() const { return m_.trace().real(); }
  const Complex& operator()(int row, int col) const { return m_(row, col); }

  HermitianOp& operator+=(const HermitianOp& rhs);
  HermitianOp& operator-=(const HermitianOp& rhs);
  HermitianOp& operator*=(double scalar);

  friend HermitianOp operator+(HermitianOp lhs, const HermitianOp& rhs) { return lhs += rhs; }
  friend HermitianOp operator-(HermitianOp lhs, const HermitianOp& rhs) { return lhs -= rhs; }
  friend HermitianOp operator*(HermitianOp lhs, double s) { return lhs *= s; }
  friend HermitianOp operator*(double s, HermitianOp rhs) { return rhs *= s; }

 private:
  ComplexMatrix m_;
};

/// Unit-trace positive semidefinite operator.
class DensityMatrix {
 public:
  explicit DensityMatrix(HermitianOp op, const Tolerances& tol = {});
  explicit DensityMatrix(ComplexMatrix m, const Tolerances& tol = {})
      : DensityMatrix(HermitianOp(std::move(m), tol), tol) {}

  /// 1/dim * identity.
  static DensityMatrix maximally_mixed(int dim = 4);
  /// |v><v| for a (normalized on construction) pure state.
  static DensityMatrix pure(const std::array<Complex, ComplexMatrix::kMaxDim>& v, int dim = 4);

  const HermitianOp& op() const noexcept { return op_; }
  const ComplexMatrix& matrix() const noexcept { return op_.matrix(); }
  int dim() const noexcept { return op_.dim(); }
  const Complex& operator()(int row, int col) const { return op_(row, col); }

  /// Tr(rho^2).
  double purity() const;

 private:
  HermitianOp op_;
};

/// Eigen-decomposition of a Hermitian operator.
struct Spectrum {
  /// Ascending; first dim entries used.
  std::array<double, ComplexMatrix::kMaxDim> eigenvalues{};
  /// Column k is the eigenvector of eigenvalues[k].
  ComplexMatrix eigenvectors;
  int dim = 0;

  double min() const { return eigenvalues[0]; }
  double max() const { return eigenvalues[dim - 1]; }
  /// V diag(lambda) V^dagger.
  ComplexMatrix reconstruct() const;
};

enum class Pauli { I, X, Y, Z };

/// Single-qubit Pauli matrix.
HermitianOp pauli(Pauli p);
/// p_I (x) p_S.
HermitianOp pauli_string(Pauli on_I, Pauli on_S);

/// Kronecker product with `a` on qubit I (left factor).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
HermitianOp tensor(const HermitianOp& a, const HermitianOp& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Transpose on one tensor factor.
ComplexMatrix partial_transpose(const ComplexMatrix& m, Qubit subsystem = Qubit::I);
HermitianOp partial_transpose(const HermitianOp& h, Qubit subsystem = Qubit::I);

/// Trace out the factor not named by `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& m, Qubit keep);
HermitianOp partial_trace(const HermitianOp& h, Qubit keep);
DensityMatrix partial_trace(const DensityMatrix& rho, Qubit keep);

/// Cyclic complex Jacobi. Deterministic for identical input.
Spectrum eig_hermitian(const HermitianOp& h);
/// Validates Hermiticity first; throws StructuralError otherwise.
Spectrum eig_hermitian(const ComplexMatrix& m, const Tolerances& tol = {});

/// Apply a real function to the eigenvalues: V f(lambda) V^dagger.
template <typename F>
ComplexMatrix spectral_map(const Spectrum& sp, F&& f) {
  ComplexMatrix out(sp.dim);
  for (int k = 0; k < sp.dim; ++k) {
    const double fk = f(sp.eigenvalues[k]);
    for (int r = 0; r < sp.dim; ++r)
      for (int c = 0; c < sp.dim; ++c)
        out(r, c) += fk * sp.eigenvectors(r, k) * std::conj(sp.eigenvectors(c, k));
  }
  return out;
}

/// Tr(rho O). Throws NumericalError when the imaginary part exceeds 1e-8.
double expectation(const DensityMatrix& rho, const HermitianOp& obs);
/// Tr(A B) for Hermitian A, B, real part, same consistency check.
double trace_product(const HermitianOp& a, const HermitianOp& b);

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, clamped to [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// True when every eigenvalue is >= -psd.
bool is_psd(const HermitianOp& h, const Tolerances& tol = {});

/// Human-readable dump, mostly for diagnostics.
std::string to_string(const ComplexMatrix& m);

}  // namespace witnesslab
