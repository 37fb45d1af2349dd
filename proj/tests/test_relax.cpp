#include <gtest/gtest.h>

#include <limits>

#include "oracles.hpp"
#include "test_support.hpp"
#include "witnesslab/errors.hpp"
#include "witnesslab/relax.hpp"

namespace witnesslab {
namespace {

using testing::Rng;

const RelaxationParams kPaper = RelaxationParams::from_t2(0.31, 0.11);

TEST(RelaxationParams, Validation) {
  EXPECT_THROW(RelaxationParams(1.0, 2.5, 1.0, 1.0), DomainError);
  EXPECT_THROW(RelaxationParams(1.0, 1.0, -1.0, 1.0), DomainError);
  EXPECT_THROW(RelaxationParams(1.0, 0.0, 1.0, 1.0), DomainError);
  EXPECT_NO_THROW(RelaxationParams(1.0, 2.0, 1.0, 2.0));
  EXPECT_EQ(kPaper.t1_I(), RelaxationParams::kDefaultT1);
  EXPECT_EQ(kPaper.t1_S(), RelaxationParams::kDefaultT1);
}

TEST(Channel, ZeroTimeIsIdentity) {
  Rng rng(103);
  const DensityMatrix rho = testing::random_state(rng);
  EXPECT_TRUE(relax_channel(rho, 0.0, kPaper).matrix().approx_equal(rho.matrix(), 0.0));
  EXPECT_THROW(relax_channel(rho, -1.0, kPaper), DomainError);
}

TEST(Channel, LongTimeReachesEquilibrium) {
  const DensityMatrix out = relax_channel(bell_state(BellKind::PhiMinus), 1e3, kPaper);
  EXPECT_LT(out.matrix().max_abs_diff(DensityMatrix::maximally_mixed().matrix()), 1e-12);
}

TEST(Channel, KrausCompleteness) {
  for (double t : {0.01, 0.1, 1.0, 10.0}) {
    ComplexMatrix sum(2);
    for (const ComplexMatrix& k : single_spin_kraus(t, 1.0, 0.4)) sum += k.adjoint() * k;
    EXPECT_LT(sum.max_abs_diff(ComplexMatrix::identity(2)), 1e-14) << t;
  }
}

TEST(Channel, ChoiMatrixIsPsd) {
  // Choi matrix of the single-spin channel: sum_ij |i><j| (x) E(|i><j|).
  for (double t : {0.01, 0.1, 1.0, 10.0}) {
    const auto kraus = single_spin_kraus(t, 2.0, 3.5);
    ComplexMatrix choi(4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        ComplexMatrix e(2);
        e(i, j) = 1.0;
        ComplexMatrix out(2);
        for (const ComplexMatrix& k : kraus) out += k * e * k.adjoint();
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c) choi(2 * i + r, 2 * j + c) = out(r, c);
      }
    EXPECT_GE(testing::min_eigenvalue(choi), -1e-12) << t;
  }
}

TEST(Channel, CptpOnRandomStates) {
  Rng rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix rho = testing::random_state(rng, 4, 1 + trial % 4);
    for (double t : {0.01, 0.1, 1.0, 10.0}) {
      const DensityMatrix out = relax_channel(rho, t, kPaper);
      EXPECT_NEAR(out.op().trace(), 1.0, 1e-9);
      EXPECT_GE(eig_hermitian(out.op()).min(), -1e-9);
    }
  }
}

TEST(Channel, Semigroup) {
  Rng rng(109);
  const RelaxationParams p(1.3, 0.7, 0.9, 1.6);
  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix rho = testing::random_state(rng);
    const double a = 0.05 + 0.01 * (trial % 7);
    const double b = 0.2 + 0.03 * (trial % 5);
    const DensityMatrix two_step = relax_channel(relax_channel(rho, a, p), b, p);
    EXPECT_LT(two_step.matrix().max_abs_diff(relax_channel(rho, a + b, p).matrix()), 1e-9);
  }
}

TEST(Channel, AgreesWithLindbladOracle) {
  Rng rng(113);
  const double t1_I = 1.2, t2_I = 0.7, t1_S = 0.8, t2_S = 1.5;
  const RelaxationParams p(t1_I, t2_I, t1_S, t2_S);
  const auto gen = testing::relaxation_generator(t1_I, t2_I, t1_S, t2_S);
  for (double t : {0.01, 0.3, 2.0}) {
    const auto prop = testing::super_exp(gen, t);
    for (int trial = 0; trial < 5; ++trial) {
      const DensityMatrix rho = testing::random_state(rng);
      const ComplexMatrix expected = testing::apply_super(prop, rho.matrix());
      EXPECT_LT(relax_channel(rho, t, p).matrix().max_abs_diff(expected), 1e-10) << t;
    }
  }
}

TEST(Channel, PureDephasingCorrelationDecay) {
  const double inf = std::numeric_limits<double>::infinity();
  const RelaxationParams p(inf, 0.31, inf, 0.11);
  const auto gen = testing::relaxation_generator(inf, 0.31, inf, 0.11);
  const DensityMatrix phi = bell_state(BellKind::PhiMinus);
  for (double t : {0.0, 0.05, 0.2, 0.5}) {
    const DensityMatrix out = relax_channel(phi, t, p);
    const double expected = -std::exp(-t * (1 / 0.31 + 1 / 0.11));
    EXPECT_NEAR(expectation(out, pauli_string(Pauli::X, Pauli::X)), expected, 1e-12);
    EXPECT_NEAR(expectation(out, pauli_string(Pauli::Z, Pauli::Z)), 1.0, 1e-12);
    if (t > 0) {
      const ComplexMatrix oracle = testing::apply_super(testing::super_exp(gen, t), phi.matrix());
      EXPECT_LT(out.matrix().max_abs_diff(oracle), 1e-10);
    }
  }
}

TEST(CrossingTime, Examples) {
  EXPECT_NEAR(*crossing_time({0.0, 1.0}, {-1.0, 1.0}, SweepQuantity::F), 0.5, 1e-15);
  EXPECT_FALSE(crossing_time({0.0, 1.0, 2.0}, {-1.0, -0.5, -0.1}, SweepQuantity::W).has_value());

  const std::vector<double> times = {0, 1, 2, 3, 4};
  const std::vector<double> values = {-0.4, -0.3, -0.1, 0.2, 0.3};
  const double tc = *crossing_time(times, values, SweepQuantity::F);
  EXPECT_GT(tc, 2.0);
  EXPECT_LT(tc, 3.0);
  EXPECT_NEAR(tc, 2.0 + 0.1 / 0.3, 1e-12);

  const std::vector<double> gr = {0.5, 0.1, 1e-5, 0.0, 0.0};
  const double tr = *crossing_time(times, gr, SweepQuantity::GR);
  EXPECT_GT(tr, 2.0);
  EXPECT_LT(tr, 3.0);
  EXPECT_FALSE(crossing_time(times, {0, 0, 0, 0, 0}, SweepQuantity::GR).has_value());
  EXPECT_THROW(crossing_time({0.0}, {1.0, 2.0}, SweepQuantity::F), StructuralError);
}

TEST(FitDecay, RecoversExponential) {
  std::vector<double> t, v;
  for (int k = 0; k < 40; ++k) {
    t.push_back(0.025 * k);
    v.push_back(0.8 * std::exp(-t.back() / 0.137));
  }
  ASSERT_TRUE(fit_decay_time(t, v).has_value());
  EXPECT_NEAR(*fit_decay_time(t, v), 0.137, 1e-9);
  EXPECT_FALSE(fit_decay_time({0.0, 1.0}, {0.0, 0.0}).has_value());
  EXPECT_FALSE(fit_decay_time({0.0, 1.0, 2.0}, {0.1, 0.2, 0.4}).has_value());
}

TEST(Sweep, MaximallyMixedIsStationary) {
  const SweepSeries s =
      sweep(DensityMatrix::maximally_mixed(), kPaper, table1_witness(BellKind::PhiMinus), 1.0, 20);
  ASSERT_EQ(s.times.size(), 20u);
  for (std::size_t k = 0; k < s.times.size(); ++k) {
    EXPECT_NEAR(s.f_values[k], 0.25, 1e-12);
    EXPECT_NEAR(s.w_values[k], 0.5, 1e-12);
    EXPECT_EQ(s.gr_values[k], 0.0);
  }
  EXPECT_FALSE(s.tau_c.has_value());
  EXPECT_FALSE(crossing_time(s, SweepQuantity::GR).has_value());
}

TEST(Sweep, PhiMinusPhenomenology) {
  const int steps = 60;
  const SweepSeries s = sweep(bell_state(BellKind::PhiMinus), kPaper, table1_witness(BellKind::PhiMinus), 1.0, steps);
  ASSERT_EQ(s.times.size(), static_cast<std::size_t>(steps));
  EXPECT_EQ(s.times.front(), 0.0);
  EXPECT_DOUBLE_EQ(s.times.back(), 1.0);
  for (std::size_t k = 1; k < s.times.size(); ++k) {
    EXPECT_GT(s.times[k], s.times[k - 1]);
    EXPECT_LE(s.gr_values[k], s.gr_values[k - 1] + 1e-8);
  }
  ASSERT_TRUE(s.tau_c.has_value());
  EXPECT_GE(*s.tau_c, 0.24);
  EXPECT_LE(*s.tau_c, 0.40);
  const auto gr_end = crossing_time(s, SweepQuantity::GR);
  ASSERT_TRUE(gr_end.has_value());
  EXPECT_GE(*gr_end, *s.tau_c);
  ASSERT_TRUE(s.tau_R.has_value());
  ASSERT_TRUE(s.tau_W.has_value());
  EXPECT_GT(*s.tau_R, 0.0);
  EXPECT_GT(*s.tau_W, 0.0);
}

TEST(Sweep, Errors) {
  const PauliWitness w = table1_witness(BellKind::PhiMinus);
  EXPECT_THROW(sweep(bell_state(BellKind::PhiMinus), kPaper, w, 1.0, 1), DomainError);
  EXPECT_THROW(sweep(bell_state(BellKind::PhiMinus), kPaper, w, 0.0, 10), DomainError);
}

TEST(Sweep, ConvergenceErrorNamesTheTime) {
  RobustnessOptions opts;
  opts.max_newton_steps = 2;
  try {
    sweep(bell_state(BellKind::PhiMinus), kPaper, table1_witness(BellKind::PhiMinus), 1.0, 5, opts);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_NE(std::string(e.what()).find("t = "), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace witnesslab
