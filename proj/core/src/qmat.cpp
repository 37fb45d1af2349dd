#include "witnesslab/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "witnesslab/errors.hpp"

namespace witnesslab {

namespace {

constexpr double kImagResidueLimit = 1e-8;
constexpr double kJacobiThreshold = 1e-12;
constexpr int kJacobiMaxSweeps = 64;

void require_dim(int dim) {
  if (dim != 2 && dim != 4)
    throw StructuralError("matrix dimension must be 2 or 4, got " + std::to_string(dim));
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim())
    throw StructuralError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()));
}

void require_two_qubits(const ComplexMatrix& m) {
  if (m.dim() != 4)
    throw StructuralError("two-qubit operation needs dim 4, got " + std::to_string(m.dim()));
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

}  // namespace

// ComplexMatrix ---------------------------------------------------------------

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) { require_dim(dim); }

ComplexMatrix::ComplexMatrix(int dim, std::initializer_list<Complex> entries) : ComplexMatrix(dim) {
  if (static_cast<int>(entries.size()) != dim * dim)
    throw StructuralError("expected " + std::to_string(dim * dim) + " entries, got " +
                          std::to_string(entries.size()));
  std::copy(entries.begin(), entries.end(), data_.begin());
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int k = 0; k < dim; ++k) m(k, k) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
  ComplexMatrix m(static_cast<int>(values.size()));
  int k = 0;
  for (double v : values) {
    m(k, k) = v;
    ++k;
  }
  return m;
}

ComplexMatrix ComplexMatrix::outer(const std::array<Complex, kMaxDim>& v, int dim) {
  ComplexMatrix m(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = v[r] * std::conj(v[c]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int k = 0; k < dim_; ++k) t += (*this)(k, k);
  return t;
}

double ComplexMatrix::norm() const {
  double s = 0.0;
  for (int k = 0; k < dim_ * dim_; ++k) s += std::norm(data_[k]);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  require_same_dim(*this, other);
  double worst = 0.0;
  for (int k = 0; k < dim_ * dim_; ++k) worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
  return worst;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& other, double tol) const {
  return dim_ == other.dim_ && max_abs_diff(other) <= tol;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  for (int r = 0; r < dim_; ++r)
    for (int c = r; c < dim_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (int k = 0; k < dim_ * dim_; ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (int k = 0; k < dim_ * dim_; ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (int k = 0; k < dim_ * dim_; ++k) data_[k] *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs);
  const int n = lhs.dim();
  ComplexMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const Complex a = lhs(r, k);
      if (a == Complex{}) continue;
      for (int c = 0; c < n; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

std::array<Complex, ComplexMatrix::kMaxDim> ComplexMatrix::apply(
    const std::array<Complex, kMaxDim>& v) const {
  std::array<Complex, kMaxDim> out{};
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

// HermitianOp -----------------------------------------------------------------

HermitianOp::HermitianOp(ComplexMatrix m, const Tolerances& tol) : m_(std::move(m)) {
  if (!m_.is_hermitian(tol.eq)) throw StructuralError("operator is not Hermitian:\n" + to_string(m_));
}

HermitianOp& HermitianOp::operator+=(const HermitianOp& rhs) {
  m_ += rhs.m_;
  return *this;
}

HermitianOp& HermitianOp::operator-=(const HermitianOp& rhs) {
  m_ -= rhs.m_;
  return *this;
}

HermitianOp& HermitianOp::operator*=(double scalar) {
  m_ *= scalar;
  return *this;
}

// DensityMatrix ---------------------------------------------------------------

DensityMatrix::DensityMatrix(HermitianOp op, const Tolerances& tol) : op_(std::move(op)) {
  const double tr = op_.trace();
  if (std::abs(tr - 1.0) > tol.eq)
    throw DomainError("density matrix trace is " + std::to_string(tr) + ", expected 1");
  const double lo = eig_hermitian(op_).min();
  if (lo < -tol.psd)
    throw DomainError("density matrix has negative eigenvalue " + std::to_string(lo));
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(ComplexMatrix::identity(dim) * Complex(1.0 / dim));
}

DensityMatrix DensityMatrix::pure(const std::array<Complex, ComplexMatrix::kMaxDim>& v, int dim) {
  double n2 = 0.0;
  for (int k = 0; k < dim; ++k) n2 += std::norm(v[k]);
  if (n2 == 0.0) throw DomainError("zero state vector");
  auto u = v;
  for (auto& x : u) x /= std::sqrt(n2);
  return DensityMatrix(ComplexMatrix::outer(u, dim));
}

double DensityMatrix::purity() const { return trace_product(op_, op_); }

// Spectrum --------------------------------------------------------------------

ComplexMatrix Spectrum::reconstruct() const {
  return spectral_map(*this, [](double x) { return x; });
}

// Pauli algebra ---------------------------------------------------------------

HermitianOp pauli(Pauli p) {
  const Complex i{0.0, 1.0};
  switch (p) {
    case Pauli::I: return HermitianOp(ComplexMatrix(2, {1.0, 0.0, 0.0, 1.0}));
    case Pauli::X: return HermitianOp(ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}));
    case Pauli::Y: return HermitianOp(ComplexMatrix(2, {0.0, -i, i, 0.0}));
    case Pauli::Z: return HermitianOp(ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}));
  }
  throw StructuralError("unknown Pauli");
}

HermitianOp pauli_string(Pauli on_I, Pauli on_S) { return tensor(pauli(on_I), pauli(on_S)); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2)
    throw StructuralError("tensor product needs two dim-2 operands");
  ComplexMatrix out(4);
  for (int i1 = 0; i1 < 2; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 2; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) out(2 * i1 + i2, 2 * j1 + j2) = a(i1, j1) * b(i2, j2);
  return out;
}

HermitianOp tensor(const HermitianOp& a, const HermitianOp& b) {
  return HermitianOp(kron(a.matrix(), b.matrix()));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.matrix(), b.matrix()));
}

// Partial operations ----------------------------------------------------------

ComplexMatrix partial_transpose(const ComplexMatrix& m, Qubit subsystem) {
  require_two_qubits(m);
  ComplexMatrix out(4);
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2) {
          const int row = 2 * i1 + i2;
          const int col = 2 * j1 + j2;
          if (subsystem == Qubit::I)
            out(2 * j1 + i2, 2 * i1 + j2) = m(row, col);
          else
            out(2 * i1 + j2, 2 * j1 + i2) = m(row, col);
        }
  return out;
}

HermitianOp partial_transpose(const HermitianOp& h, Qubit subsystem) {
  return HermitianOp(partial_transpose(h.matrix(), subsystem));
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Qubit keep) {
  require_two_qubits(m);
  ComplexMatrix out(2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int k = 0; k < 2; ++k) {
        if (keep == Qubit::I)
          out(a, b) += m(2 * a + k, 2 * b + k);
        else
          out(a, b) += m(2 * k + a, 2 * k + b);
      }
  return out;
}

HermitianOp partial_trace(const HermitianOp& h, Qubit keep) {
  return HermitianOp(partial_trace(h.matrix(), keep));
}

DensityMatrix partial_trace(const DensityMatrix& rho, Qubit keep) {
  return DensityMatrix(partial_trace(rho.matrix(), keep));
}

// Eigensolver -----------------------------------------------------------------

Spectrum eig_hermitian(const HermitianOp& h) {
  const int n = h.dim();
  ComplexMatrix a = h.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(1.0, a.norm());

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < kJacobiThreshold * scale) break;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) continue;
        // Phase-rotate column q so a(p,q) becomes real, then a real Givens
        // rotation on the (p,q) plane annihilates it.
        const Complex phase = std::conj(apq) / r;
        const double theta = 0.5 * std::atan2(2.0 * r, a(q, q).real() - a(p, p).real());
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        ComplexMatrix u = ComplexMatrix::identity(n);
        u(p, p) = c;
        u(p, q) = s;
        u(q, p) = -s * phase;
        u(q, q) = c * phase;
        a = u.adjoint() * a * u;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        v = v * u;
      }
  }
  if (off_diagonal_norm(a) >= 1e-9 * scale)
    throw NumericalError("Jacobi eigensolver did not converge");

  std::array<int, ComplexMatrix::kMaxDim> order{};
  std::iota(order.begin(), order.begin() + n, 0);
  std::stable_sort(order.begin(), order.begin() + n,
                   [&](int x, int y) { return a(x, x).real() < a(y, y).real(); });

  Spectrum sp;
  sp.dim = n;
  sp.eigenvectors = ComplexMatrix(n);
  for (int k = 0; k < n; ++k) {
    sp.eigenvalues[k] = a(order[k], order[k]).real();
    for (int r = 0; r < n; ++r) sp.eigenvectors(r, k) = v(r, order[k]);
  }
  return sp;
}

Spectrum eig_hermitian(const ComplexMatrix& m, const Tolerances& tol) {
  return eig_hermitian(HermitianOp(m, tol));
}

// Scalars ---------------------------------------------------------------------

double trace_product(const HermitianOp& a, const HermitianOp& b) {
  if (a.dim() != b.dim()) throw StructuralError("trace product of mismatched dimensions");
  Complex t = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) t += a(r, c) * b(c, r);
  if (std::abs(t.imag()) > kImagResidueLimit)
    throw NumericalError("trace product has imaginary part " + std::to_string(t.imag()));
  return t.real();
}

double expectation(const DensityMatrix& rho, const HermitianOp& obs) {
  return trace_product(rho.op(), obs);
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw StructuralError("fidelity of mismatched dimensions");
  const ComplexMatrix root = spectral_map(eig_hermitian(rho.op()),
                                          [](double x) { return std::sqrt(std::max(x, 0.0)); });
  ComplexMatrix inner = root * sigma.matrix() * root;
  // Round-off can break exact Hermiticity of the triple product.
  inner = (inner + inner.adjoint()) * Complex(0.5);
  const Spectrum sp = eig_hermitian(HermitianOp(inner));
  // Eigenvalues at round-off level would otherwise add O(1e-8) through the root.
  const double floor = 64 * std::numeric_limits<double>::epsilon() * std::max(sp.max(), 0.0);
  double s = 0.0;
  for (int k = 0; k < sp.dim; ++k)
    if (sp.eigenvalues[k] > floor) s += std::sqrt(sp.eigenvalues[k]);
  return std::clamp(s * s, 0.0, 1.0);
}

bool is_psd(const HermitianOp& h, const Tolerances& tol) { return eig_hermitian(h).min() >= -tol.psd; }

std::string to_string(const ComplexMatrix& m) {
  std::ostringstream os;
  os.precision(6);
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) {
      const Complex z = m(r, c);
      os << (c ? "  " : "") << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace witnesslab
