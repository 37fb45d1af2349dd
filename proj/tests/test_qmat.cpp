#include <gtest/gtest.h>

#include "test_support.hpp"
#include "witnesslab/errors.hpp"
#include "witnesslab/qmat.hpp"
#include "witnesslab/states.hpp"

namespace witnesslab {
namespace {

using testing::Rng;

TEST(Tensor, PauliProducts) {
  EXPECT_TRUE(pauli_string(Pauli::Z, Pauli::Z).matrix().approx_equal(ComplexMatrix::diagonal({1, -1, -1, 1})));
  EXPECT_TRUE(pauli_string(Pauli::I, Pauli::I).matrix().approx_equal(ComplexMatrix::identity(4)));

  const ComplexMatrix xx = pauli_string(Pauli::X, Pauli::X).matrix();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) EXPECT_EQ(xx(r, c), Complex(r + c == 3 ? 1.0 : 0.0));
}

TEST(Tensor, QubitIIsTheSlowIndex) {
  // Z on I alone flips the sign of the lower half of the basis.
  EXPECT_TRUE(pauli_string(Pauli::Z, Pauli::I).matrix().approx_equal(ComplexMatrix::diagonal({1, 1, -1, -1})));
}

TEST(Tensor, RejectsWrongDimensions) {
  EXPECT_THROW(kron(ComplexMatrix::identity(4), ComplexMatrix::identity(2)), StructuralError);
  EXPECT_THROW(ComplexMatrix(3), StructuralError);
}

TEST(PartialTranspose, BellProjectorSpectrum) {
  const Spectrum sp = eig_hermitian(partial_transpose(bell_state(BellKind::PhiPlus).op()));
  EXPECT_NEAR(sp.eigenvalues[0], -0.5, 1e-12);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(sp.eigenvalues[k], 0.5, 1e-12);
}

TEST(PartialTranspose, DiagonalUnchanged) {
  const HermitianOp d(ComplexMatrix::diagonal({0.1, 0.2, 0.3, 0.4}));
  EXPECT_TRUE(partial_transpose(d).matrix().approx_equal(d.matrix(), 0.0));
  EXPECT_TRUE(partial_transpose(d, Qubit::S).matrix().approx_equal(d.matrix(), 0.0));
}

TEST(PartialTranspose, ProductState) {
  Rng rng(3);
  const DensityMatrix a = testing::random_state(rng, 2);
  const DensityMatrix b = testing::random_state(rng, 2);
  const ComplexMatrix pt = partial_transpose(tensor(a, b).matrix());
  EXPECT_TRUE(pt.approx_equal(kron(a.matrix().transpose(), b.matrix()), 1e-14));
  EXPECT_GE(testing::min_eigenvalue(pt), -1e-12);
}

TEST(PartialTranspose, RandomInvariants) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const DensityMatrix rho = testing::random_state(rng);
    const DensityMatrix sigma = testing::random_state(rng);
    for (Qubit q : {Qubit::I, Qubit::S}) {
      const HermitianOp pt = partial_transpose(rho.op(), q);
      EXPECT_TRUE(partial_transpose(pt, q).matrix().approx_equal(rho.matrix(), 1e-12));
      EXPECT_NEAR(pt.trace(), rho.op().trace(), 1e-12);
    }
    // Tr(W sigma^{T_A}) = Tr(W^{T_A} sigma)
    const double lhs = trace_product(rho.op(), partial_transpose(sigma.op()));
    const double rhs = trace_product(partial_transpose(rho.op()), sigma.op());
    EXPECT_NEAR(lhs, rhs, 1e-10);
  }
}

TEST(PartialTrace, Marginals) {
  const DensityMatrix phi = bell_state(BellKind::PhiPlus);
  EXPECT_TRUE(partial_trace(phi, Qubit::I).matrix().approx_equal(ComplexMatrix::identity(2) * Complex(0.5)));

  Rng rng(5);
  const DensityMatrix a = testing::random_state(rng, 2);
  const DensityMatrix b = testing::random_state(rng, 2);
  EXPECT_TRUE(partial_trace(tensor(a, b), Qubit::I).matrix().approx_equal(a.matrix(), 1e-14));
  EXPECT_TRUE(partial_trace(tensor(a, b), Qubit::S).matrix().approx_equal(b.matrix(), 1e-14));

  const double eps_I = 0.3;
  const DensityMatrix th = thermal_state({eps_I, 0.8});
  EXPECT_TRUE(partial_trace(th, Qubit::I)
                  .matrix()
                  .approx_equal(ComplexMatrix::diagonal({(1 + eps_I) / 2, (1 - eps_I) / 2}), 1e-15));
}

TEST(Eigen, DiagonalAndProjectors) {
  const Spectrum d = eig_hermitian(HermitianOp(ComplexMatrix::diagonal({3, 1, 2, 0})));
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(d.eigenvalues[k], k, 1e-15);

  const Spectrum p = eig_hermitian(bell_state(BellKind::PhiMinus).op());
  EXPECT_NEAR(p.eigenvalues[0], 0.0, 1e-12);
  EXPECT_NEAR(p.eigenvalues[1], 0.0, 1e-12);
  EXPECT_NEAR(p.eigenvalues[2], 0.0, 1e-12);
  EXPECT_NEAR(p.eigenvalues[3], 1.0, 1e-12);
}

TEST(Eigen, BellDiagonalTarget) {
  const Spectrum sp = eig_hermitian(bell_diagonal({-0.2, 1.0, 0.2}).op());
  const std::array<double, 4> expected = {0.0, 0.0, 0.4, 0.6};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(sp.eigenvalues[k], expected[k], 1e-12);
}

TEST(Eigen, RejectsNonHermitian) {
  ComplexMatrix m = ComplexMatrix::identity(4);
  m(0, 1) = 1.0;
  EXPECT_THROW(eig_hermitian(m), StructuralError);
  EXPECT_THROW(HermitianOp{m}, StructuralError);
}

TEST(Eigen, RandomReconstructionAndOrthonormality) {
  Rng rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const DensityMatrix rho = testing::random_state(rng, trial % 2 ? 4 : 2, 1 + trial % 4);
    const Spectrum sp = eig_hermitian(rho.op());
    EXPECT_GE(sp.min(), -1e-9);
    for (int k = 1; k < sp.dim; ++k) EXPECT_LE(sp.eigenvalues[k - 1], sp.eigenvalues[k]);
    EXPECT_LT(sp.reconstruct().max_abs_diff(rho.matrix()), 1e-8);
    const ComplexMatrix vv = sp.eigenvectors.adjoint() * sp.eigenvectors;
    EXPECT_LT(vv.max_abs_diff(ComplexMatrix::identity(sp.dim)), 1e-8);
  }
}

TEST(Eigen, Deterministic) {
  Rng rng(23);
  const DensityMatrix rho = testing::random_state(rng);
  const Spectrum a = eig_hermitian(rho.op());
  const Spectrum b = eig_hermitian(rho.op());
  EXPECT_EQ(a.eigenvalues, b.eigenvalues);
  EXPECT_TRUE(a.eigenvectors.approx_equal(b.eigenvectors, 0.0));
}

TEST(Expectation, PaperValues) {
  EXPECT_NEAR(expectation(bell_state(BellKind::PhiMinus), pauli_string(Pauli::X, Pauli::X)), -1.0, 1e-12);
  EXPECT_NEAR(expectation(bell_diagonal({-0.2, 1.0, 0.2}), pauli_string(Pauli::Z, Pauli::Z)), 0.2, 1e-12);
  const DensityMatrix mixed = DensityMatrix::maximally_mixed();
  for (Pauli a : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z})
    for (Pauli b : {Pauli::X, Pauli::Y, Pauli::Z}) EXPECT_NEAR(expectation(mixed, pauli_string(a, b)), 0.0, 1e-15);
}

TEST(Fidelity, Basics) {
  Rng rng(29);
  const DensityMatrix rho = testing::random_state(rng);
  EXPECT_NEAR(fidelity(rho, rho), 1.0, 1e-9);

  const DensityMatrix zero = DensityMatrix::pure({1, 0, 0, 0});
  const DensityMatrix ones = DensityMatrix::pure({0, 0, 0, 1});
  EXPECT_NEAR(fidelity(zero, ones), 0.0, 1e-12);

  // Pure against mixed reduces to <psi|sigma|psi> = 1/4.
  EXPECT_NEAR(fidelity(bell_state(BellKind::PhiMinus), DensityMatrix::maximally_mixed()), 0.25, 1e-9);
}

TEST(Fidelity, SymmetricOnRandomPairs) {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix a = testing::random_state(rng);
    const DensityMatrix b = testing::random_state(rng);
    const double f = fidelity(a, b);
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0);
    EXPECT_NEAR(f, fidelity(b, a), 1e-8);
  }
}

TEST(DensityMatrix, ValidatesTraceAndPositivity) {
  EXPECT_THROW(DensityMatrix(ComplexMatrix::diagonal({0.5, 0.5, 0.5, 0.5})), DomainError);
  EXPECT_THROW(DensityMatrix(ComplexMatrix::diagonal({1.2, -0.2, 0.0, 0.0})), DomainError);
  EXPECT_NO_THROW(DensityMatrix(ComplexMatrix::diagonal({1.0, 0.0, 0.0, 0.0})));
}

TEST(Tolerances, TighterToleranceRejectsMore) {
  ComplexMatrix m = ComplexMatrix::identity(4);
  m(0, 1) = 1e-11;
  EXPECT_NO_THROW(HermitianOp{m});
  EXPECT_THROW(HermitianOp(m, Tolerances{1e-12, 1e-9}), StructuralError);
}

}  // namespace
}  // namespace witnesslab
