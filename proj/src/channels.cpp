#include "catkit/channels.hpp"

#include <algorithm>
#include <cmath>

namespace catkit {

std::vector<Matrix> loss_kraus_operators(const FockSpace& space, const LossChannel& channel) {
  const int n_cut = space.n_cut;
  const int k_max = channel.kraus_cut > 0 ? std::min(channel.kraus_cut, n_cut) : n_cut;
  const double eta = channel.eta;
  std::vector<Matrix> kraus;
  kraus.reserve(k_max);
  for (int k = 0; k < k_max; ++k) {
    Matrix kk = Matrix::Zero(n_cut, n_cut);
    for (int n = k; n < n_cut; ++n) {
      if (k > 0 && eta >= 1.0) break;  // lossless channel has K_0 = I only
      // sqrt(C(n,k) (1-eta)^k eta^{n-k}), evaluated in log space for stability
      double log_amp = 0.5 * (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                              std::lgamma(n - k + 1.0) + (n - k) * std::log(eta));
      if (k > 0) log_amp += 0.5 * k * std::log1p(-eta);
      kk(n - k, n) = std::exp(log_amp);
    }
    kraus.push_back(std::move(kk));
  }
  return kraus;
}

double kraus_completeness_residual(const FockSpace& space, const LossChannel& channel) {
  auto kraus = loss_kraus_operators(space, channel);
  Matrix sum = Matrix::Zero(space.n_cut, space.n_cut);
  for (const auto& k : kraus) sum += k.adjoint() * k;
  return guarded_max_norm(sum - Matrix::Identity(space.n_cut, space.n_cut), space);
}

QuantumState apply_loss(const FockSpace& space, const QuantumState& state,
                        const LossChannel& channel) {
  if (state.dim() != space.n_cut)
    throw DimensionMismatch("apply_loss: state dimension does not match space");
  double residual = kraus_completeness_residual(space, channel);
  if (residual > 1e-8)
    throw KrausIncomplete("apply_loss: completeness residual " + std::to_string(residual) +
                          " (kraus_cut too small)");
  Matrix rho = state.density();
  Matrix out = Matrix::Zero(space.n_cut, space.n_cut);
  for (const auto& k : loss_kraus_operators(space, channel)) out += k * rho * k.adjoint();
  // Trace is preserved up to the guarded-band residual; renormalize the
  // remainder so the result is a valid density matrix.
  out /= out.trace().real();
  out = 0.5 * (out + out.adjoint().eval());
  return QuantumState::from_density(std::move(out));
}

double wrapped_gaussian_weight(double theta, const PhaseDiffusion& diff) {
  if (diff.sigma > 5.0) return 1.0 / (2.0 * M_PI);
  const int wraps = static_cast<int>(std::ceil(6.0 * diff.sigma / (2.0 * M_PI))) + 1;
  double w = 0.0;
  for (int j = -wraps; j <= wraps; ++j) {
    double d = theta - diff.theta0 - 2.0 * M_PI * j;
    if (std::abs(d) > 6.0 * diff.sigma) continue;
    w += std::exp(-0.5 * d * d / (diff.sigma * diff.sigma));
  }
  return w / std::sqrt(2.0 * M_PI * diff.sigma * diff.sigma);
}

namespace {

Matrix diffused_density(const FockSpace& space, Complex alpha, int branch,
                        const PhaseDiffusion& diff, int nodes) {
  Matrix rho = Matrix::Zero(space.n_cut, space.n_cut);
  double total = 0.0;
  const double dt = 2.0 * M_PI / nodes;
  // Periodic trapezoid rule; anchoring the grid at theta0 keeps the
  // delta-distribution limit (sigma below the node spacing) on a node.
  for (int i = 0; i < nodes; ++i) {
    double theta = diff.theta0 + i * dt;
    double w = wrapped_gaussian_weight(theta, diff);
    if (w <= 0.0) continue;
    CVector psi = cat_state(space, CatSpec{alpha, branch, theta}).vec();
    rho += w * (psi * psi.adjoint());
    total += w;
  }
  return rho / total;
}

}  // namespace

QuantumState apply_phase_diffusion(const FockSpace& space, Complex alpha, int branch,
                                   const PhaseDiffusion& diff) {
  require_adequate(space, std::abs(alpha));
  Matrix rho = diffused_density(space, alpha, branch, diff, diff.quad_points);
  Matrix rho2 = diffused_density(space, alpha, branch, diff, 2 * diff.quad_points);
  // Doubling the nodes must leave witness expectations unchanged; probe the
  // matched witness in two frames to cover both pair-coherence components.
  for (double phi : {0.0, M_PI / 4.0}) {
    WitnessSpec probe{alpha, 1.0, branch, phi};
    double a = witness_expectation_fock(QuantumState::from_density(rho), probe);
    double b = witness_expectation_fock(QuantumState::from_density(rho2), probe);
    if (std::abs(a - b) > 1e-8)
      throw QuadratureUnderresolved("apply_phase_diffusion: witness moved by " +
                                    std::to_string(std::abs(a - b)) +
                                    " when doubling quad_points");
  }
  return QuantumState::from_density(std::move(rho));
}

SweepResult robustness_scan(const FockSpace& space, Complex alpha,
                            std::vector<double> eta_grid, const OptimizerConfig& cfg) {
  if (eta_grid.empty()) throw std::invalid_argument("robustness_scan: empty eta grid");
  std::sort(eta_grid.begin(), eta_grid.end());
  SweepResult table({"eta", "branch", "xi", "witness_expectation"});
  for (double eta : eta_grid) {
    for (int branch : {+1, -1}) {
      QuantumState cat = cat_state(space, CatSpec{alpha, branch, 0.0});
      QuantumState rho = apply_loss(space, cat, LossChannel(eta));
      XiResult xi = xi_measure(space, rho, alpha, branch, cfg);
      double expect = witness_expectation_fock(rho, WitnessSpec{alpha, 1.0, branch, 0.0});
      table.add_row({eta, static_cast<double>(branch), xi.xi, expect});
    }
  }
  return table;
}

}  // namespace catkit
