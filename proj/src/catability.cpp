#include "catkit/catability.hpp"

#include <cmath>
#include <limits>

namespace catkit {

namespace {

void check_branch(int branch) {
  if (branch != 1 && branch != -1)
    throw std::invalid_argument("witness: branch must be +1 or -1");
}

}  // namespace

WitnessParts witness_parts(const FockSpace& space, const WitnessSpec& spec) {
  check_branch(spec.branch);
  if (spec.gamma <= 0.0) throw std::invalid_argument("witness: gamma must be positive");
  require_adequate(space, std::abs(spec.alpha));
  LadderOperators ops = make_ladder(space);
  int n = space.n_cut;
  Complex a2 = spec.alpha * spec.alpha * std::exp(2.0 * kI * spec.phi);
  Matrix shifted = ops.lowering * ops.lowering - a2 * Matrix::Identity(n, n);
  WitnessParts parts;
  parts.quadratic = shifted.adjoint() * shifted;
  parts.parity_gap = Matrix::Identity(n, n) -
                     static_cast<double>(spec.branch) * parity_operator(space);
  return parts;
}

Matrix witness_operator(const FockSpace& space, const WitnessSpec& spec) {
  WitnessParts parts = witness_parts(space, spec);
  return parts.quadratic + spec.gamma * parts.parity_gap;
}

double witness_expectation_fock(const QuantumState& state, const WitnessSpec& spec) {
  check_branch(spec.branch);
  if (!state.is_vector() && state.dim() < 3)
    throw DimensionMismatch("witness_expectation_fock: state too small");
  const Matrix rho = state.density();
  const int n_cut = static_cast<int>(rho.rows());
  Complex a2 = spec.alpha * spec.alpha * std::exp(2.0 * kI * spec.phi);

  double diag_sum = 0.0;    // sum n(n-1) rho_nn
  double parity_sum = 0.0;  // sum (-1)^n rho_nn
  Complex up_sum = 0.0;     // sum sqrt((n+1)(n+2)) rho_{n,n+2}
  Complex down_sum = 0.0;   // sum sqrt(n(n-1)) rho_{n,n-2}
  for (int n = 0; n < n_cut; ++n) {
    double pop = rho(n, n).real();
    diag_sum += n * (n - 1.0) * pop;
    parity_sum += (n % 2 == 0 ? 1.0 : -1.0) * pop;
    if (n + 2 < n_cut) up_sum += std::sqrt((n + 1.0) * (n + 2.0)) * rho(n, n + 2);
    if (n >= 2) down_sum += std::sqrt(n * (n - 1.0)) * rho(n, n - 2);
  }
  Complex value = diag_sum - a2 * up_sum - std::conj(a2) * down_sum +
                  std::pow(std::abs(spec.alpha), 4) +
                  spec.gamma * (1.0 - static_cast<double>(spec.branch) * parity_sum);
  return value.real();
}

double witness_expectation_pure(const CVector& psi, const WitnessSpec& spec) {
  check_branch(spec.branch);
  const int n_cut = static_cast<int>(psi.size());
  Complex a2 = spec.alpha * spec.alpha * std::exp(2.0 * kI * spec.phi);
  double diag_sum = 0.0, parity_sum = 0.0;
  Complex up_sum = 0.0;
  for (int n = 0; n < n_cut; ++n) {
    double pop = std::norm(psi(n));
    diag_sum += n * (n - 1.0) * pop;
    parity_sum += (n % 2 == 0 ? 1.0 : -1.0) * pop;
    if (n + 2 < n_cut)
      up_sum += std::sqrt((n + 1.0) * (n + 2.0)) * std::conj(psi(n)) * psi(n + 2);
  }
  // <a^dag^2> = conj(<a^2>) for pure states; a2-weighted terms combine to 2 Re.
  Complex pair = a2 * std::conj(up_sum);
  double value = diag_sum - 2.0 * pair.real() + std::pow(std::abs(spec.alpha), 4) +
                 spec.gamma * (1.0 - static_cast<double>(spec.branch) * parity_sum);
  return value;
}

double phase_covariance_residual(const FockSpace& space, const WitnessSpec& spec,
                                 double chi) {
  Matrix o_phi = witness_operator(space, spec);
  WitnessSpec rotated = spec;
  rotated.phi = spec.phi + chi;
  Matrix o_rot = witness_operator(space, rotated);
  Matrix r = phase_rotation(space, chi);
  return guarded_max_norm(r * o_phi * r.adjoint() - o_rot, space);
}

QuantumState gaussian_state(const FockSpace& space, const GaussianParams& params) {
  require_adequate(space, std::abs(params.beta));
  if (params.r < 0.0) throw std::invalid_argument("gaussian_state: r must be >= 0");
  if (params.r > 2.0)
    throw TruncationError("gaussian_state: squeezing r > 2 exceeds the safe bound");
  LadderOperators ops = make_ladder(space);
  Complex zeta = params.r * std::exp(kI * params.phi_sq);
  Matrix squeeze = matrix_exponential(0.5 * (zeta * ops.raising * ops.raising -
                                             std::conj(zeta) * ops.lowering * ops.lowering));
  Matrix displace = matrix_exponential(params.beta * ops.raising -
                                       std::conj(params.beta) * ops.lowering);
  CVector vac = CVector::Zero(space.n_cut);
  vac(0) = 1.0;
  CVector v = displace * (squeeze * vac);
  v.normalize();
  return QuantumState::from_vector(std::move(v));
}

CVector gaussian_state_amplitudes(const FockSpace& space, const GaussianParams& params,
                                  double* captured_out) {
  const int n_cut = space.n_cut;
  const double r = params.r;
  const Complex beta = params.beta;
  const double mu = std::cosh(r);
  const Complex eta = std::sinh(r) * std::exp(kI * params.phi_sq);
  // (mu a - eta a^dag)|psi> = (mu beta - eta conj(beta))|psi>
  const Complex z = mu * beta - eta * std::conj(beta);

  CVector c(n_cut);
  c(0) = 1.0;
  c(1) = z / mu;
  for (int n = 1; n + 1 < n_cut; ++n)
    c(n + 1) = (z * c(n) + eta * std::sqrt(static_cast<double>(n)) * c(n - 1)) /
               (mu * std::sqrt(n + 1.0));

  if (captured_out) {
    // |<0|D S|0>|^2 = exp(-|beta|^2 + Re(conj(beta)^2 e^{i phi}) tanh r)/cosh r
    double log_c0 = -std::norm(beta) +
                    (std::conj(beta) * std::conj(beta) * std::exp(kI * params.phi_sq)).real() *
                        std::tanh(r) -
                    std::log(mu);
    *captured_out = std::exp(log_c0) * c.squaredNorm();
  }
  c.normalize();
  return c;
}

namespace {

GaussianParams unpack(const Eigen::VectorXd& x, double beta_max, double r_max) {
  GaussianParams g;
  g.beta = Complex(x(0), x(1));
  if (std::abs(g.beta) > beta_max) g.beta *= beta_max / std::abs(g.beta);
  Complex zeta(x(2), x(3));
  double r = std::abs(zeta);
  if (r > r_max) {
    zeta *= r_max / r;
    r = r_max;
  }
  g.r = r;
  g.phi_sq = (r > 0.0) ? std::arg(zeta) : 0.0;
  if (g.phi_sq < 0.0) g.phi_sq += 2.0 * M_PI;
  return g;
}

}  // namespace

GaussianMinimum gaussian_minimum(const FockSpace& space, const WitnessSpec& spec,
                                 const OptimizerConfig& cfg) {
  check_branch(spec.branch);
  const double beta_max = std::abs(spec.alpha) + cfg.beta_margin;
  const double r_max = cfg.r_max;

  auto objective = [&](const Eigen::VectorXd& x) -> double {
    GaussianParams g = unpack(x, beta_max, r_max);
    double captured = 1.0;
    CVector psi = gaussian_state_amplitudes(space, g, &captured);
    // Truncation losing mass would fake low witness values; reject such points.
    if (captured < 1.0 - 1e-6) return 1e12 * (1.0 + (1.0 - captured));
    return witness_expectation_pure(psi, spec);
  };

  // Multistart grid over (|beta|, arg beta, r, phi_sq): coherent +-alpha,
  // the vacuum, and squeezed-vacuum seeds aligned with alpha^2.
  const double mag = std::abs(spec.alpha);
  const double arg = std::arg(spec.alpha == Complex(0, 0) ? Complex(1, 0) : spec.alpha);
  std::vector<Eigen::VectorXd> starts;
  for (double b : {0.0, mag})
    for (double a : {arg, arg + M_PI})
      for (double r0 : {0.0, 0.7}) {
        Complex beta0 = b * std::exp(kI * a);
        Complex zeta0 = r0 * std::exp(kI * (2.0 * arg));
        Eigen::VectorXd x(4);
        x << beta0.real(), beta0.imag(), zeta0.real(), zeta0.imag();
        starts.push_back(x);
      }
  starts.resize(std::min<std::size_t>(starts.size(), cfg.multistarts));

  SimplexOptions opts;
  opts.max_iter = cfg.max_iter;
  opts.f_tol = cfg.f_tol;
  opts.init_step = Eigen::VectorXd::Constant(4, 0.3);
  SimplexResult best = multistart_minimize(objective, starts, opts);

  GaussianMinimum out;
  out.value = best.value;
  out.argmin = unpack(best.x, beta_max, r_max);
  if (!std::isfinite(out.value))
    throw OptimizationFailure("gaussian_minimum: optimizer returned non-finite value");
  return out;
}

XiResult xi_measure(const FockSpace& space, const QuantumState& state, Complex alpha,
                    int branch, const OptimizerConfig& cfg) {
  check_branch(branch);
  require_adequate(space, std::abs(alpha));

  // Numerator pieces are linear in gamma: Tr(O rho) = q + gamma * p.
  WitnessSpec unit{alpha, 1.0, branch, 0.0};
  WitnessSpec probe = unit;
  probe.gamma = 2.0;
  double e1 = witness_expectation_fock(state, unit);
  double e2 = witness_expectation_fock(state, probe);
  const double p_state = e2 - e1;
  const double q_state = e1 - p_state;

  struct Best {
    double ratio = std::numeric_limits<double>::infinity();
    double gamma = 0.0;
    GaussianMinimum gm;
    double num = 0.0;
  } best;

  auto ratio_at = [&](double gamma) {
    WitnessSpec s = unit;
    s.gamma = gamma;
    GaussianMinimum gm = gaussian_minimum(space, s, cfg);
    if (gm.value < 1e-14)
      throw DegenerateDenominator(
          "xi_measure: Gaussian minimum vanished (alpha ~ 0, even branch)");
    double num = q_state + gamma * p_state;
    double ratio = num / gm.value;
    if (ratio < best.ratio) best = {ratio, gamma, gm, num};
    return ratio;
  };

  const double log_lo = std::log(cfg.gamma_lo), log_hi = std::log(cfg.gamma_hi);
  for (int i = 0; i < cfg.gamma_grid; ++i) {
    double t = cfg.gamma_grid == 1 ? 0.5 : static_cast<double>(i) / (cfg.gamma_grid - 1);
    ratio_at(std::exp(log_lo + t * (log_hi - log_lo)));
  }

  // Local refinement around the best grid point, on log(gamma).
  double span = (log_hi - log_lo) / std::max(1, cfg.gamma_grid - 1);
  double center = std::log(best.gamma);
  golden_section_minimize([&](double lg) { return ratio_at(std::exp(lg)); },
                          std::max(log_lo, center - span),
                          std::min(log_hi, center + span), 1e-3);

  XiResult out;
  out.xi = std::max(0.0, best.ratio);
  out.gamma_star = best.gamma;
  out.gaussian_star = best.gm.argmin;
  out.numerator = best.num;
  out.denominator = best.gm.value;
  return out;
}

}  // namespace catkit
