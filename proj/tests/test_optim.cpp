#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_support.hpp"
#include "witnesslab/errors.hpp"
#include "witnesslab/optim.hpp"

namespace witnesslab {
namespace {

using testing::Rng;

DensityMatrix mix_with_identity(const DensityMatrix& rho, double t) {
  ComplexMatrix m = rho.matrix() * Complex(1.0 - t);
  m += ComplexMatrix::identity(4) * Complex(t / 4.0);
  return DensityMatrix(m);
}

// --- linear programs --------------------------------------------------------

TEST(SolveLp, UnitInterval) {
  const LinearProgram lp{{1.0}, {{1.0}, {-1.0}}, {1.0, 0.0}};
  const LpSolution s = solve_lp(lp);
  EXPECT_NEAR(s.x[0], 0.0, 1e-15);
  EXPECT_NEAR(s.objective, 0.0, 1e-15);
}

TEST(SolveLp, TwoDimensional) {
  // max x + y over x + 2y <= 4, 3x + y <= 6, x, y >= 0: optimum at (1.6, 1.2).
  const LinearProgram lp{{-1.0, -1.0}, {{1, 2}, {3, 1}, {-1, 0}, {0, -1}}, {4, 6, 0, 0}};
  const LpSolution s = solve_lp(lp);
  EXPECT_NEAR(s.x[0], 1.6, 1e-12);
  EXPECT_NEAR(s.x[1], 1.2, 1e-12);
  EXPECT_NEAR(s.objective, -2.8, 1e-12);
}

TEST(SolveLp, DegenerateOptimumPicksLexLargest) {
  // min -x - y over the unit square clipped by x + y <= 1: whole edge optimal.
  const LinearProgram lp{{-1.0, -1.0}, {{1, 1}, {-1, 0}, {0, -1}}, {1, 0, 0}};
  const LpSolution s = solve_lp(lp);
  EXPECT_NEAR(s.objective, -1.0, 1e-12);
  EXPECT_NEAR(s.x[0], 1.0, 1e-12);
  EXPECT_NEAR(s.x[1], 0.0, 1e-12);
}

TEST(SolveLp, Errors) {
  EXPECT_THROW(solve_lp({{1.0}, {{1.0}, {-1.0}}, {0.0, -1.0}}), InfeasibleError);
  EXPECT_THROW(solve_lp({{-1.0}, {{-1.0}}, {0.0}}), UnboundedError);
  EXPECT_THROW(solve_lp({{1.0, 1.0}, {{1.0}}, {0.0}}), StructuralError);
  EXPECT_THROW(solve_lp({{}, {}, {}}), StructuralError);
}

TEST(SolveLp, BoundedDespiteUnboundedFeasibleSet) {
  // Feasible set x >= 0 is unbounded, but minimizing x is not.
  const LpSolution s = solve_lp({{1.0}, {{-1.0}}, {0.0}});
  EXPECT_NEAR(s.x[0], 0.0, 1e-15);
}

// --- optimal witnesses ------------------------------------------------------

TEST(OptimalWitness, ReproducesTable1) {
  for (BellKind k : kAllBellKinds) {
    const OptimalWitness ow = optimal_witness(k);
    const PauliWitness expected = table1_witness(k);
    EXPECT_NEAR(ow.witness.c_I, expected.c_I, 1e-12) << to_string(k);
    EXPECT_NEAR(ow.witness.c_x, expected.c_x, 1e-12) << to_string(k);
    EXPECT_NEAR(ow.witness.c_y, expected.c_y, 1e-12) << to_string(k);
    EXPECT_NEAR(ow.witness.c_z, expected.c_z, 1e-12) << to_string(k);
    EXPECT_NEAR(ow.objective, -1.0, 1e-9);
    EXPECT_NEAR(eval_witness(ow.witness, bell_state(k)), ow.objective, 1e-9);
    EXPECT_TRUE(is_valid_witness(ow.witness));
  }
}

TEST(OptimalWitness, PhiMinusProgramObjective) {
  EXPECT_NEAR(solve_lp(witness_program(BellKind::PhiMinus)).objective, -1.0, 1e-12);
}

TEST(OptimalWitness, RandomSearchNeverBeatsLp) {
  // Independent check: sample the coefficient box, keep points that pass the
  // matrix-level validity test, and track the best target expectation.
  Rng rng(73);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (BellKind k : kAllBellKinds) {
    const DensityMatrix target = bell_state(k);
    double best = 1e9;
    int feasible = 0;
    for (int trial = 0; trial < 4000; ++trial) {
      const PauliWitness w{u(rng), u(rng), u(rng), u(rng)};
      if (!is_valid_witness(w)) continue;
      ++feasible;
      best = std::min(best, eval_witness(w, target));
    }
    EXPECT_GT(feasible, 0);
    EXPECT_GE(best, optimal_witness(k).objective - 1e-9) << to_string(k);
  }
}

// --- robustness oracle ------------------------------------------------------

TEST(GrOracle, Examples) {
  EXPECT_NEAR(gr_oracle_bd({-1, 1, 1}), 1.0, 1e-15);
  EXPECT_NEAR(gr_oracle_bd({-0.2, 1.0, 0.2}), 0.2, 1e-15);
  EXPECT_EQ(gr_oracle_bd({0, 0, 0}), 0.0);
}

TEST(GrOracle, AgreesWithBruteForce) {
  const BellDiagonalParams points[] = {{-1, 1, 1}, {-0.2, 1.0, 0.2}, {0, 0, 0}, {-0.6, 0.6, 0.6}, {0.9, -0.5, 0.4}};
  for (const auto& c : points) {
    const double brute = testing::brute_force_gr_bd(c, 1e-3, 12);
    EXPECT_NEAR(brute, gr_oracle_bd(c), 2e-3) << c.c1 << "," << c.c2 << "," << c.c3;
  }
}

// --- generalized robustness -------------------------------------------------

TEST(Robustness, Examples) {
  EXPECT_NEAR(generalized_robustness(bell_state(BellKind::PhiMinus)).value, 1.0, 1e-6);
  EXPECT_NEAR(generalized_robustness(bell_diagonal({-0.2, 1.0, 0.2})).value, 0.2, 1e-6);
  const RobustnessResult id = generalized_robustness(DensityMatrix::maximally_mixed());
  EXPECT_EQ(id.value, 0.0);
  EXPECT_FALSE(id.certificate_state.has_value());
}

TEST(Robustness, BracketsTheValue) {
  const RobustnessResult r = generalized_robustness(bell_diagonal({-0.5, 0.7, 0.3}));
  EXPECT_LE(r.lower_bound, r.value + 1e-12);
  EXPECT_LT(r.value - r.lower_bound, 1e-6);
  ASSERT_TRUE(r.witness.has_value());
  // Dual witness: W^{T_A} >= 0, W <= I.
  EXPECT_GE(eig_hermitian(partial_transpose(*r.witness)).min(), -1e-9);
  EXPECT_LE(eig_hermitian(*r.witness).max(), 1.0 + 1e-9);
}

TEST(Robustness, MatchesOracleOnBellDiagonal) {
  Rng rng(79);
  for (int trial = 0; trial < 200; ++trial) {
    const BellDiagonalParams c = testing::random_physical_c(rng);
    EXPECT_NEAR(generalized_robustness(bell_diagonal(c)).value, gr_oracle_bd(c), 1e-5);
  }
}

TEST(Robustness, ZeroExactlyOnPptStates) {
  Rng rng(83);
  for (int trial = 0; trial < 1000; ++trial) {
    const DensityMatrix rho = testing::random_state(rng, 4, 1 + trial % 4);
    const RobustnessResult r = generalized_robustness(rho);
    const bool ppt = testing::min_eigenvalue(partial_transpose(rho.matrix())) >= -1e-9;
    EXPECT_EQ(r.value == 0.0, ppt) << "trial " << trial << " value " << r.value;
    EXPECT_GE(r.value, -1e-9);
    EXPECT_GE(r.certificate_residual(rho), -Tolerances{}.psd);
  }
}

TEST(Robustness, PureStatesTwiceNegativity) {
  // Schmidt form a|00> + b|11>: GR = 2ab and the negative PT eigenvalue is -ab.
  Rng rng(89);
  for (int trial = 0; trial < 200; ++trial) {
    const DensityMatrix rho = testing::random_pure(rng);
    EXPECT_NEAR(generalized_robustness(rho).value, 2.0 * negativity(rho), 1e-6);
  }
}

TEST(Robustness, NonIncreasingUnderMixing) {
  Rng rng(97);
  int checked = 0;
  while (checked < 10) {
    const DensityMatrix rho = testing::random_state(rng, 4, 1 + checked % 2);
    if (negativity(rho) < 1e-3) continue;
    ++checked;
    double prev = generalized_robustness(rho).value;
    for (int i = 1; i < 20; ++i) {
      const double now = generalized_robustness(mix_with_identity(rho, i / 19.0)).value;
      EXPECT_LE(now, prev + 1e-7);
      prev = now;
    }
    EXPECT_EQ(prev, 0.0);
  }
}

TEST(Robustness, Deterministic) {
  Rng rng(101);
  const DensityMatrix rho = testing::random_pure(rng);
  const RobustnessResult a = generalized_robustness(rho);
  const RobustnessResult b = generalized_robustness(rho);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(Robustness, StepCapRaisesConvergenceError) {
  RobustnessOptions opts;
  opts.max_newton_steps = 3;
  try {
    generalized_robustness(bell_state(BellKind::PhiMinus), opts);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_LE(e.lower_bound(), 1.0 + 1e-9);
    EXPECT_GE(e.upper_bound(), 1.0 - 1e-9);
  }
}

TEST(Negativity, Examples) {
  EXPECT_NEAR(negativity(bell_state(BellKind::PhiMinus)), 0.5, 1e-12);
  EXPECT_NEAR(negativity(DensityMatrix::maximally_mixed()), 0.0, 1e-15);
  EXPECT_NEAR(negativity(bell_diagonal({-0.2, 1.0, 0.2})), 0.1, 1e-12);
}

}  // namespace
}  // namespace witnesslab
