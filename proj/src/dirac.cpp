#include "catkit/dirac.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include "catkit/fw.hpp"
#include "catkit/optimize.hpp"

namespace catkit {

CVector positive_energy_spinor(double p, double m, int spin) {
  if (m <= 0.0) throw ZeroMass("positive_energy_spinor: mass must be positive");
  if (spin != 1 && spin != -1)
    throw std::invalid_argument("positive_energy_spinor: spin must be +1 or -1");
  const double e = std::hypot(p, m);
  CVector u = CVector::Zero(4);
  // sigma.p reduces to sigma_z p for 1-D momentum: lower component +-p/(E+m).
  if (spin == 1) {
    u(0) = 1.0;
    u(2) = p / (e + m);
  } else {
    u(1) = 1.0;
    u(3) = -p / (e + m);
  }
  u.normalize();
  return u;
}

ParityFactors dirac_parity_expectations(const DiracCatSpec& spec, const CVector& spinor) {
  if (spinor.size() != 4)
    throw DimensionMismatch("dirac_parity_expectations: spinor must be 4-dimensional");
  ParityFactors f;
  f.spinorial = spinor.dot(dirac_gamma(0) * spinor).real();
  const double overlap = std::exp(-2.0 * std::norm(spec.alpha));
  const double sign = static_cast<double>(spec.branch);
  f.orbital = (sign + overlap) / (1.0 + sign * overlap);
  f.product = f.spinorial * f.orbital;
  return f;
}

double relativistic_catability_closed_form(const DiracCatSpec& spec) {
  if (spec.branch != 1 && spec.branch != -1)
    throw std::invalid_argument("relativistic_catability: branch must be +1 or -1");
  const double overlap = std::exp(-2.0 * std::norm(spec.alpha));
  const double sign = static_cast<double>(spec.branch);
  const double orbital = (sign + overlap) / (1.0 + sign * overlap);
  const double m_over_e = spec.mass / spec.energy();
  return spec.gamma * (1.0 - sign * m_over_e * orbital);
}

double relativistic_catability_numeric(const FockSpace& space, const DiracCatSpec& spec) {
  require_adequate(space, std::abs(spec.alpha));
  const int n = space.n_cut;
  LadderOperators ops = make_ladder(space);
  Matrix shifted = ops.lowering * ops.lowering -
                   spec.alpha * spec.alpha * Matrix::Identity(n, n);
  Matrix quad = shifted.adjoint() * shifted;
  Matrix id4 = Matrix::Identity(4, 4);
  Matrix parity_product = Eigen::kroneckerProduct(parity_operator(space), dirac_gamma(0));
  Matrix c_d = Eigen::kroneckerProduct(quad, id4) +
               spec.gamma * (Matrix::Identity(4 * n, 4 * n) -
                             static_cast<double>(spec.branch) * parity_product);

  CVector cat = cat_state(space, CatSpec{spec.alpha, spec.branch, 0.0}).vec();
  CVector spinor = positive_energy_spinor(spec.momentum, spec.mass);
  CVector psi = Eigen::kroneckerProduct(cat, spinor);
  return psi.dot(c_d * psi).real();
}

double m_over_e_series(double p, double m, int order) {
  if (m <= 0.0) throw ZeroMass("m_over_e_series: mass must be positive");
  if (std::abs(p) >= m)
    throw DivergentRegime("m_over_e_series: |p| >= m is outside convergence");
  if (order < 0) throw std::invalid_argument("m_over_e_series: negative order");
  // (1+u)^{-1/2} Taylor coefficients via the recurrence c_{k+1}/c_k = -(2k+1)/(2k+2).
  double u = (p / m) * (p / m);
  double sum = 0.0, term = 1.0;
  for (int k = 0; 2 * k <= order; ++k) {
    sum += term;
    term *= -u * (2.0 * k + 1.0) / (2.0 * k + 2.0);
  }
  return sum;
}

double revival_time(double m, double omega) {
  if (m <= 0.0 || omega <= 0.0)
    throw std::invalid_argument("revival_time: m and omega must be positive");
  return 4.0 * M_PI * m / (omega * omega);
}

double autocorrelation(const std::vector<double>& weights, const std::vector<double>& energies,
                       double t) {
  if (weights.size() != energies.size())
    throw DimensionMismatch("autocorrelation: weights/energies size mismatch");
  Complex z = 0.0;
  for (std::size_t n = 0; n < weights.size(); ++n)
    z += weights[n] * std::exp(-kI * (energies[n] * t));
  return std::norm(z);
}

double revival_detect(double m, double omega, Complex alpha, int n_cut) {
  const double t_rev = revival_time(m, omega);
  const double mean = std::norm(alpha);
  if (n_cut < required_n_cut(std::abs(alpha)))
    throw TruncationError("revival_detect: n_cut inadequate for alpha");

  std::vector<double> weights(n_cut), energies(n_cut);
  double total = 0.0;
  for (int n = 0; n < n_cut; ++n) {
    double lp = -mean + n * std::log(mean) - std::lgamma(n + 1.0);
    weights[n] = (mean > 0.0) ? std::exp(lp) : (n == 0 ? 1.0 : 0.0);
    total += weights[n];
    double x = n + 0.5;
    energies[n] = m + omega * x - omega * omega / (2.0 * m) * x * x;
  }
  for (auto& w : weights) w /= total;

  // The anharmonic shift must stay perturbative over the occupied levels.
  double shift = omega * omega / (2.0 * m) * (mean + 6.0 * std::sqrt(mean) + 3.0);
  if (shift >= omega)
    throw NoRevivalFound("revival_detect: quadratic shift not perturbative at this alpha");

  const double t_lo = 0.5 * t_rev;
  const double dt = 2.0 * M_PI / omega / 64.0;
  const int n_samp = static_cast<int>(std::ceil(t_rev / dt));
  std::vector<double> sig(n_samp + 1);
  for (int i = 0; i <= n_samp; ++i) sig[i] = autocorrelation(weights, energies, t_lo + i * dt);

  // First interior local maximum above threshold; a recurrence centered on
  // the window edge (the half-revival of integer m/omega) is not a peak.
  for (int i = 1; i < n_samp; ++i) {
    if (sig[i] >= 0.9 && sig[i] >= sig[i - 1] && sig[i] >= sig[i + 1]) {
      double t_peak;
      golden_section_minimize(
          [&](double t) { return -autocorrelation(weights, energies, t); },
          t_lo + (i - 1) * dt, t_lo + (i + 1) * dt, 1e-6 * t_rev, &t_peak);
      return t_peak;
    }
  }
  throw NoRevivalFound("revival_detect: no autocorrelation peak >= 0.9 in [0.5, 1.5] T_rev");
}

std::vector<double> zitterbewegung_signal(double m, double p, double t_max, int n_samples,
                                          const CVector& initial) {
  if (initial.size() != 4)
    throw DimensionMismatch("zitterbewegung_signal: state must be 4-dimensional");
  if (n_samples < 2) throw std::invalid_argument("zitterbewegung_signal: n_samples < 2");
  Matrix h = free_dirac_hamiltonian(p, m).total();
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  Matrix v = es.eigenvectors();
  Eigen::VectorXd ev = es.eigenvalues();
  Matrix ax = dirac_alpha_x();
  CVector psi0 = v.adjoint() * initial;  // eigenbasis components

  std::vector<double> out(n_samples);
  const double dt = t_max / (n_samples - 1);
  for (int i = 0; i < n_samples; ++i) {
    CVector psi_t(4);
    for (int k = 0; k < 4; ++k) psi_t(k) = std::exp(-kI * (ev(k) * (i * dt))) * psi0(k);
    CVector full = v * psi_t;
    out[i] = full.dot(ax * full).real();
  }
  return out;
}

double zitterbewegung_frequency(double m, double p, double t_max, int n_samples) {
  const double e = std::hypot(p, m);
  const double sample_rate = 2.0 * M_PI * (n_samples - 1) / t_max;  // angular
  if (sample_rate < 4.0 * (2.0 * e))
    throw AliasedSampling("zitterbewegung_frequency: need Nyquist margin >= 4 at 2E");

  // Equal positive/negative-energy superposition; these branches are coupled
  // by alpha_x, so the expectation oscillates at their gap 2E.
  CVector u_plus = CVector::Zero(4), u_minus = CVector::Zero(4);
  u_plus(0) = 1.0;
  u_plus(3) = p / (e + m);
  u_minus(0) = -p / (e + m);
  u_minus(3) = 1.0;
  u_plus.normalize();
  u_minus.normalize();
  CVector init = (u_plus + u_minus) / std::sqrt(2.0);
  std::vector<double> sig = zitterbewegung_signal(m, p, t_max, n_samples, init);

  double mean = 0.0;
  for (double s : sig) mean += s;
  mean /= sig.size();

  // Direct DFT periodogram; the signal is a single tone at 2E plus DC.
  int best_k = 1;
  double best_power = -1.0;
  const int n = static_cast<int>(sig.size());
  for (int k = 1; k <= n / 2; ++k) {
    Complex acc = 0.0;
    for (int i = 0; i < n; ++i)
      acc += (sig[i] - mean) * std::exp(-kI * (2.0 * M_PI * k * i / n));
    double power = std::norm(acc);
    if (power > best_power) {
      best_power = power;
      best_k = k;
    }
  }
  return 2.0 * M_PI * best_k * (n_samples - 1) / (t_max * n_samples);
}

double relativistic_uncertainty_product(double p2_expect, double m) {
  if (p2_expect < 0.0)
    throw std::invalid_argument("relativistic_uncertainty_product: <p^2> must be >= 0");
  if (m <= 0.0) throw ZeroMass("relativistic_uncertainty_product: mass must be positive");
  return 0.5 * (1.0 + p2_expect / (2.0 * m * m));
}

}  // namespace catkit
