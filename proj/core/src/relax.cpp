#include "witnesslab/relax.hpp"

#include <cmath>
#include <sstream>

#include "witnesslab/errors.hpp"

namespace witnesslab {

namespace {

constexpr double kFitFraction = 1e-3;

double decay(double t, double time_constant) {
  return std::isinf(time_constant) ? 1.0 : std::exp(-t / time_constant);
}

ComplexMatrix apply_kraus(const ComplexMatrix& rho, const std::vector<ComplexMatrix>& ops, Qubit q) {
  const ComplexMatrix id = ComplexMatrix::identity(2);
  ComplexMatrix out(4);
  for (const ComplexMatrix& k : ops) {
    const ComplexMatrix lifted = q == Qubit::I ? kron(k, id) : kron(id, k);
    out += lifted * rho * lifted.adjoint();
  }
  return out;
}

}  // namespace

RelaxationParams::RelaxationParams(double t1_I, double t2_I, double t1_S, double t2_S)
    : t1_I_(t1_I), t2_I_(t2_I), t1_S_(t1_S), t2_S_(t2_S) {
  for (double v : {t1_I, t2_I, t1_S, t2_S})
    if (!(v > 0.0)) throw DomainError("relaxation times must be positive");
  if (t2_I > 2.0 * t1_I || t2_S > 2.0 * t1_S)
    throw DomainError("unphysical relaxation times: T2 must not exceed 2 T1");
}

RelaxationParams RelaxationParams::from_t2(double t2_I, double t2_S) {
  return RelaxationParams(kDefaultT1, t2_I, kDefaultT1, t2_S);
}

std::vector<ComplexMatrix> single_spin_kraus(double t, double t1, double t2) {
  // Generalized amplitude damping with equilibrium I/2: populations relax
  // as exp(-t/T1), coherences pick up exp(-t/2T1).
  const double keep = decay(t, t1);
  const double gamma = 1.0 - keep;
  const double h = std::sqrt(0.5);
  std::vector<ComplexMatrix> gad = {
      ComplexMatrix(2, {h, 0.0, 0.0, h * std::sqrt(keep)}),
      ComplexMatrix(2, {0.0, h * std::sqrt(gamma), 0.0, 0.0}),
      ComplexMatrix(2, {h * std::sqrt(keep), 0.0, 0.0, h}),
      ComplexMatrix(2, {0.0, 0.0, h * std::sqrt(gamma), 0.0}),
  };
  // Pure dephasing supplies the rest of the 1/T2 coherence decay.
  const double rate = 1.0 / t2 - (std::isinf(t1) ? 0.0 : 0.5 / t1);
  const double lambda = std::exp(-t * rate);
  const ComplexMatrix k0 = ComplexMatrix::identity(2) * Complex(std::sqrt((1.0 + lambda) / 2.0));
  const ComplexMatrix k1 = pauli(Pauli::Z).matrix() * Complex(std::sqrt((1.0 - lambda) / 2.0));

  std::vector<ComplexMatrix> out;
  for (const ComplexMatrix& a : gad) {
    out.push_back(k0 * a);
    out.push_back(k1 * a);
  }
  return out;
}

DensityMatrix relax_channel(const DensityMatrix& rho, double t, const RelaxationParams& p) {
  if (!(t >= 0.0)) throw DomainError("relaxation time must be non-negative");
  if (rho.dim() != 4) throw StructuralError("relaxation channel acts on two spins");
  if (t == 0.0) return rho;
  ComplexMatrix m = apply_kraus(rho.matrix(), single_spin_kraus(t, p.t1_I(), p.t2_I()), Qubit::I);
  m = apply_kraus(m, single_spin_kraus(t, p.t1_S(), p.t2_S()), Qubit::S);
  m = (m + m.adjoint()) * Complex(0.5);
  return DensityMatrix(m);
}

SweepSeries sweep(const DensityMatrix& rho0, const RelaxationParams& p, const PauliWitness& w, double t_max,
                  int steps, const RobustnessOptions& opts) {
  if (steps < 2) throw DomainError("a sweep needs at least two time points");
  if (!(t_max > 0.0)) throw DomainError("sweep length must be positive");

  SweepSeries s;
  s.times.resize(steps);
  s.f_values.resize(steps);
  s.w_values.resize(steps);
  s.gr_values.resize(steps);
  for (int k = 0; k < steps; ++k) {
    const double t = t_max * k / (steps - 1);
    const DensityMatrix rho = relax_channel(rho0, t, p);
    s.times[k] = t;
    s.f_values[k] = f_witness_state(rho);
    s.w_values[k] = eval_witness(w, rho);
    try {
      s.gr_values[k] = generalized_robustness(rho, opts).value;
    } catch (const ConvergenceError& e) {
      std::ostringstream msg;
      msg << e.what() << " (sweep point t = " << t << " s)";
      throw ConvergenceError(msg.str(), e.lower_bound(), e.upper_bound());
    }
  }

  s.tau_c = crossing_time(s, SweepQuantity::F);
  s.tau_R = fit_decay_time(s.times, s.gr_values);
  std::vector<double> w_excess(steps);
  for (int k = 0; k < steps; ++k) w_excess[k] = std::abs(s.w_values[k] - kWitnessAsymptote);
  s.tau_W = fit_decay_time(s.times, w_excess);
  return s;
}

std::optional<double> crossing_time(const std::vector<double>& times, const std::vector<double>& values,
                                    SweepQuantity quantity) {
  if (times.size() != values.size()) throw StructuralError("times and values differ in length");
  const double level = quantity == SweepQuantity::GR ? kRobustnessFloor : 0.0;
  for (std::size_t k = 0; k + 1 < values.size(); ++k) {
    const double a = values[k] - level;
    const double b = values[k + 1] - level;
    const bool crosses = quantity == SweepQuantity::GR ? (a >= 0.0 && b < 0.0) : ((a < 0.0) != (b < 0.0));
    if (!crosses) continue;
    const double frac = a / (a - b);
    return times[k] + frac * (times[k + 1] - times[k]);
  }
  return std::nullopt;
}

std::optional<double> crossing_time(const SweepSeries& series, SweepQuantity quantity) {
  switch (quantity) {
    case SweepQuantity::F: return crossing_time(series.times, series.f_values, quantity);
    case SweepQuantity::W: return crossing_time(series.times, series.w_values, quantity);
    case SweepQuantity::GR: return crossing_time(series.times, series.gr_values, quantity);
  }
  return std::nullopt;
}

std::optional<double> fit_decay_time(const std::vector<double>& times, const std::vector<double>& values) {
  if (times.size() != values.size()) throw StructuralError("times and values differ in length");
  if (values.empty() || values.front() == 0.0) return std::nullopt;
  const double cutoff = kFitFraction * std::abs(values.front());

  std::vector<double> ts, ys;
  for (std::size_t k = 0; k < values.size(); ++k)
    if (values[k] > cutoff) {
      ts.push_back(times[k]);
      ys.push_back(values[k]);
    }
  if (ts.size() < 2) return std::nullopt;

  // Log-linear regression seeds a Gauss-Newton fit of A exp(-t/tau).
  const double n = static_cast<double>(ts.size());
  double st = 0, sl = 0, stt = 0, stl = 0;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const double l = std::log(ys[k]);
    st += ts[k];
    sl += l;
    stt += ts[k] * ts[k];
    stl += ts[k] * l;
  }
  const double denom = n * stt - st * st;
  if (denom <= 0.0) return std::nullopt;
  const double slope = (n * stl - st * sl) / denom;
  if (!(slope < 0.0)) return std::nullopt;
  double amp = std::exp((sl - slope * st) / n);
  double rate = -slope;

  for (int iter = 0; iter < 50; ++iter) {
    double jaa = 0, jar = 0, jrr = 0, ga = 0, gr = 0;
    for (std::size_t k = 0; k < ts.size(); ++k) {
      const double e = std::exp(-rate * ts[k]);
      const double r = amp * e - ys[k];
      const double da = e;
      const double dr = -amp * ts[k] * e;
      jaa += da * da;
      jar += da * dr;
      jrr += dr * dr;
      ga += da * r;
      gr += dr * r;
    }
    const double det = jaa * jrr - jar * jar;
    if (det <= 0.0) break;
    const double step_a = -(jrr * ga - jar * gr) / det;
    const double step_r = -(jaa * gr - jar * ga) / det;
    if (!(rate + step_r > 0.0)) break;
    amp += step_a;
    rate += step_r;
    if (std::abs(step_r) <= 1e-12 * rate) break;
  }
  return 1.0 / rate;
}

}  // namespace witnesslab
