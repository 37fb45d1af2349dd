#include "witnesslab/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "witnesslab/errors.hpp"

namespace witnesslab {

namespace {

constexpr double kPivotFloor = 1e-12;
constexpr double kFeasibilitySlack = 1e-9;
constexpr double kObjectiveTie = 1e-9;
constexpr double kBoxRadius = 1e6;
// Generalized robustness of any two-qubit state is at most 1; the solver
// must never come near this.
constexpr double kRobustnessCeiling = 3.0;

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;

double dot(const Vec& a, const Vec& b) { return std::inner_product(a.begin(), a.end(), b.begin(), 0.0); }

// Gaussian elimination with partial pivoting; nullopt when singular.
std::optional<Vec> solve_square(Mat a, Vec b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < kPivotFloor) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  Vec x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

// Visit every size-k subset of {0..m-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t m, std::size_t k, F&& visit) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct VertexSearch {
  bool found = false;
  Vec x;
  double objective = std::numeric_limits<double>::infinity();
};

VertexSearch best_vertex(const Vec& objective, const Mat& rows, const Vec& bounds) {
  const std::size_t n = objective.size();
  VertexSearch best;
  for_each_subset(rows.size(), n, [&](const std::vector<std::size_t>& active) {
    Mat a;
    Vec b;
    for (std::size_t i : active) {
      a.push_back(rows[i]);
      b.push_back(bounds[i]);
    }
    const auto x = solve_square(std::move(a), std::move(b));
    if (!x) return;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (dot(rows[i], *x) > bounds[i] + kFeasibilitySlack * std::max(1.0, std::abs(bounds[i]))) return;
    const double value = dot(objective, *x);
    const bool better = value < best.objective - kObjectiveTie;
    const bool tie = std::abs(value - best.objective) <= kObjectiveTie;
    if (!best.found || better || (tie && std::lexicographical_compare(best.x.begin(), best.x.end(),
                                                                      x->begin(), x->end()))) {
      best.found = true;
      best.x = *x;
      best.objective = value;
    }
  });
  return best;
}

void add_box(Mat& rows, Vec& bounds, std::size_t n, double radius) {
  for (std::size_t j = 0; j < n; ++j) {
    Vec up(n, 0.0), down(n, 0.0);
    up[j] = 1.0;
    down[j] = -1.0;
    rows.push_back(up);
    bounds.push_back(radius);
    rows.push_back(down);
    bounds.push_back(radius);
  }
}

// Pauli-basis helpers for the robustness program. Basis B_k = P_k / 2 is
// orthonormal under the Hilbert-Schmidt product.
struct PauliBasis {
  std::array<ComplexMatrix, 16> b;
  // Sign picked up under partial transpose on qubit I (Y^T = -Y).
  std::array<double, 16> pt_sign{};

  PauliBasis() {
    constexpr std::array<Pauli, 4> order = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
    for (int k = 0; k < 16; ++k) {
      b[k] = pauli_string(order[k / 4], order[k % 4]).matrix() * Complex(0.5);
      pt_sign[k] = order[k / 4] == Pauli::Y ? -1.0 : 1.0;
    }
  }
};

const PauliBasis& pauli_basis() {
  static const PauliBasis basis;
  return basis;
}

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  double t = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) t += (a(r, c) * b(c, r)).real();
  return t;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return (m + m.adjoint()) * Complex(0.5); }

// Cholesky solve of a symmetric positive definite system.
std::optional<Vec> solve_spd(const Mat& h, const Vec& rhs) {
  const std::size_t n = rhs.size();
  Mat l(n, Vec(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = h[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      if (i == j) {
        if (s <= 0.0) return std::nullopt;
        l[i][i] = std::sqrt(s);
      } else {
        l[i][j] = s / l[j][j];
      }
    }
  }
  Vec y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = rhs[i];
    for (std::size_t k = 0; k < i; ++k) s -= l[i][k] * y[k];
    y[i] = s / l[i][i];
  }
  Vec x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = y[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= l[k][i] * x[k];
    x[i] = s / l[i][i];
  }
  return x;
}

// Log-barrier state for  min 2 x_0  s.t.  omega(x) > 0,  rho^{T_A} + omega(x)^{T_A} > 0.
class RobustnessBarrier {
 public:
  explicit RobustnessBarrier(const ComplexMatrix& rho_pt) : rho_pt_(rho_pt) {}

  ComplexMatrix omega(const Vec& x) const {
    ComplexMatrix m(4);
    for (int k = 0; k < 16; ++k) m += pauli_basis().b[k] * Complex(x[k]);
    return m;
  }

  ComplexMatrix shifted_pt(const Vec& x) const {
    ComplexMatrix m = rho_pt_;
    for (int k = 0; k < 16; ++k) m += pauli_basis().b[k] * Complex(pauli_basis().pt_sign[k] * x[k]);
    return m;
  }

  // Barrier value, or +inf outside the open feasible set.
  double value(const Vec& x, double t) const {
    const Spectrum a = eig_hermitian(HermitianOp(hermitian_part(omega(x))));
    const Spectrum p = eig_hermitian(HermitianOp(hermitian_part(shifted_pt(x))));
    if (a.min() <= 0.0 || p.min() <= 0.0) return std::numeric_limits<double>::infinity();
    double logdet = 0.0;
    for (int k = 0; k < 4; ++k) logdet += std::log(a.eigenvalues[k]) + std::log(p.eigenvalues[k]);
    return 2.0 * t * x[0] - logdet;
  }

  void derivatives(const Vec& x, double t, Vec& grad, Mat& hess) const {
    const auto inverse = [](const ComplexMatrix& m) {
      return spectral_map(eig_hermitian(HermitianOp(hermitian_part(m))), [](double v) { return 1.0 / v; });
    };
    const ComplexMatrix a_inv = inverse(omega(x));
    const ComplexMatrix p_inv = inverse(shifted_pt(x));
    const auto& basis = pauli_basis();
    std::array<ComplexMatrix, 16> ab, pb;
    for (int k = 0; k < 16; ++k) {
      ab[k] = a_inv * basis.b[k];
      pb[k] = p_inv * basis.b[k];
    }
    grad.assign(16, 0.0);
    hess.assign(16, Vec(16, 0.0));
    for (int k = 0; k < 16; ++k) {
      grad[k] = (k == 0 ? 2.0 * t : 0.0) - ab[k].trace().real() - basis.pt_sign[k] * pb[k].trace().real();
      for (int l = 0; l <= k; ++l) {
        const double h = real_trace_product(ab[k], ab[l]) +
                         basis.pt_sign[k] * basis.pt_sign[l] * real_trace_product(pb[k], pb[l]);
        hess[k][l] = h;
        hess[l][k] = h;
      }
    }
  }

 private:
  ComplexMatrix rho_pt_;
};

}  // namespace

// Linear programming -----------------------------------------------------------

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t n = lp.objective.size();
  if (n == 0) throw StructuralError("linear program has no variables");
  if (lp.constraints.size() != lp.bounds.size())
    throw StructuralError("constraint rows and bounds differ in count");
  for (const Vec& row : lp.constraints)
    if (row.size() != n) throw StructuralError("constraint row has wrong length");

  // Boxing guarantees vertices exist even when the feasible set has a
  // lineality space; unboundedness is decided separately below.
  Mat rows = lp.constraints;
  Vec bounds = lp.bounds;
  add_box(rows, bounds, n, kBoxRadius);
  const VertexSearch primal = best_vertex(lp.objective, rows, bounds);
  if (!primal.found) throw InfeasibleError("linear program is infeasible");

  // Recession cone: A d <= 0 within the unit box. A strictly improving
  // direction means the objective is unbounded below.
  Mat cone = lp.constraints;
  Vec zeros(cone.size(), 0.0);
  add_box(cone, zeros, n, 1.0);
  const VertexSearch ray = best_vertex(lp.objective, cone, zeros);
  if (ray.found && ray.objective < -kObjectiveTie) throw UnboundedError("linear program is unbounded");

  return {primal.x, primal.objective};
}

LinearProgram witness_program(BellKind kind) {
  LinearProgram lp;
  const BellDiagonalParams target = bell_correlations(kind);
  lp.objective = {1.0, target.c1, target.c2, target.c3};
  for (BellKind b : kAllBellKinds) {
    const BellDiagonalParams c = bell_correlations(b);
    // W <= I on each Bell eigenvector.
    lp.constraints.push_back({1.0, c.c1, c.c2, c.c3});
    lp.bounds.push_back(1.0);
    // W^{T_A} = c_I + c_x XX - c_y YY + c_z ZZ >= 0 on each Bell eigenvector.
    lp.constraints.push_back({-1.0, -c.c1, c.c2, -c.c3});
    lp.bounds.push_back(0.0);
  }
  return lp;
}

OptimalWitness optimal_witness(BellKind kind) {
  const LpSolution sol = solve_lp(witness_program(kind));
  return {PauliWitness{sol.x[0], sol.x[1], sol.x[2], sol.x[3]}, sol.objective};
}

// Generalized robustness -------------------------------------------------------

double RobustnessResult::certificate_residual(const DensityMatrix& rho) const {
  ComplexMatrix mix = rho.matrix();
  if (certificate_state) mix += certificate_state->matrix() * Complex(value);
  mix *= Complex(1.0 / (1.0 + value));
  return eig_hermitian(HermitianOp(hermitian_part(partial_transpose(mix)))).min();
}

RobustnessResult generalized_robustness(const DensityMatrix& rho, const RobustnessOptions& opts) {
  if (rho.dim() != 4) throw StructuralError("generalized robustness needs a two-qubit state");
  const ComplexMatrix rho_pt = partial_transpose(rho.matrix());
  const double pt_min = eig_hermitian(HermitianOp(rho_pt)).min();

  RobustnessResult result;
  if (pt_min >= -opts.tol.psd) return result;

  const RobustnessBarrier barrier(rho_pt);
  constexpr double kBarrierDegree = 8.0;  // two 4x4 cones
  constexpr double kGrowth = 8.0;
  constexpr double kCentered = 1e-12;
  constexpr int kCenteringSteps = 60;
  constexpr double kQuadraticRegion = 0.04;  // squared Newton decrement

  // omega = alpha I is strictly feasible once alpha exceeds |pt_min|.
  Vec x(16, 0.0);
  x[0] = 2.0 * (1.0 - pt_min);
  double t = 1.0;
  Vec grad;
  Mat hess;
  double best_lower = 0.0;
  std::optional<HermitianOp> best_witness;

  const auto dual_bound = [&](double t_now) {
    const ComplexMatrix p_inv = spectral_map(
        eig_hermitian(HermitianOp(hermitian_part(barrier.shifted_pt(x)))), [](double v) { return 1.0 / v; });
    HermitianOp w(hermitian_part(partial_transpose(p_inv * Complex(1.0 / t_now))));
    const double top = eig_hermitian(w).max();
    if (top > 1.0) w *= 1.0 / top;
    return std::make_pair(-trace_product(w, rho.op()), w);
  };

  while (true) {
    // Newton centering at fixed t.
    for (int step_count = 0; step_count < kCenteringSteps; ++step_count) {
      if (result.iterations >= opts.max_newton_steps) {
        const double upper = 2.0 * x[0];
        throw ConvergenceError("generalized robustness did not converge within " +
                                   std::to_string(opts.max_newton_steps) + " Newton steps",
                               std::max({0.0, best_lower, dual_bound(t).first}), upper);
      }
      barrier.derivatives(x, t, grad, hess);
      Vec neg(16);
      for (int k = 0; k < 16; ++k) neg[k] = -grad[k];
      auto step = solve_spd(hess, neg);
      if (!step) {
        // Round-off made the Hessian indefinite; a tiny ridge restores it.
        double ridge = 1e-14;
        for (int k = 0; k < 16; ++k) ridge = std::max(ridge, 1e-14 * hess[k][k]);
        for (int k = 0; k < 16; ++k) hess[k][k] += ridge;
        step = solve_spd(hess, neg);
        if (!step) throw NumericalError("robustness Newton system is singular");
      }
      ++result.iterations;
      const double decrement = -dot(grad, *step);
      if (decrement / 2.0 <= kCentered) break;

      Vec trial(16);
      bool moved = false;
      if (decrement < kQuadraticRegion) {
        // Close to the center a full step stays feasible and converges
        // quadratically; barrier values are too large here to resolve the
        // Armijo decrease.
        for (int k = 0; k < 16; ++k) trial[k] = x[k] + (*step)[k];
        moved = std::isfinite(barrier.value(trial, t));
      }
      if (!moved) {
        const double f0 = barrier.value(x, t);
        double alpha = 1.0;
        for (int ls = 0; ls < 60; ++ls, alpha *= 0.5) {
          for (int k = 0; k < 16; ++k) trial[k] = x[k] + alpha * (*step)[k];
          const double f1 = barrier.value(trial, t);
          if (f1 <= f0 - 0.25 * alpha * decrement) {
            moved = true;
            break;
          }
        }
      }
      if (!moved) break;  // at the numerical floor of this centering problem
      double change = 0.0;
      for (int k = 0; k < 16; ++k) change = std::max(change, std::abs(trial[k] - x[k]));
      x = trial;
      if (change <= 1e-15 * std::max(1.0, std::abs(x[0]))) break;
    }
    // Every rescaled dual point is a valid bound; keep the best one seen.
    auto [lower, w] = dual_bound(t);
    if (!best_witness || lower > best_lower) {
      best_lower = lower;
      best_witness = w;
    }
    if (kBarrierDegree / t <= opts.gap) break;
    t *= kGrowth;
  }

  result.value = 2.0 * x[0];
  if (result.value > kRobustnessCeiling)
    throw NumericalError("generalized robustness exceeded its a-priori bound: " + std::to_string(result.value));
  result.lower_bound = std::max(0.0, best_lower);
  result.witness = best_witness;
  const ComplexMatrix omega = hermitian_part(barrier.omega(x));
  if (result.value > 0.0) result.certificate_state = DensityMatrix(omega * Complex(1.0 / result.value));
  return result;
}

double gr_oracle_bd(const BellDiagonalParams& c) {
  const BellWeights w = bell_probabilities(c);
  return std::max(0.0, 2.0 * *std::max_element(w.begin(), w.end()) - 1.0);
}

double negativity(const DensityMatrix& rho) {
  const Spectrum sp = eig_hermitian(partial_transpose(rho.op()));
  double s = 0.0;
  for (int k = 0; k < sp.dim; ++k)
    if (sp.eigenvalues[k] < 0.0) s -= sp.eigenvalues[k];
  return s;
}

}  // namespace witnesslab
