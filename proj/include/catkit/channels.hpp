#ifndef CATKIT_CHANNELS_HPP
#define CATKIT_CHANNELS_HPP

#include "catkit/catability.hpp"
#include "catkit/sweep.hpp"

namespace catkit {

/// Pure photon loss at transmissivity eta, Kraus form
/// K_k = (1-eta)^{k/2}/sqrt(k!) eta^{n/2} a^k, k < kraus_cut.
struct LossChannel {
  double eta;
  int kraus_cut;  // <= 0 means n_cut (exact channel on the truncated space)

  explicit LossChannel(double eta_, int kraus_cut_ = 0) : eta(eta_), kraus_cut(kraus_cut_) {
    if (eta <= 0.0 || eta > 1.0)
      throw std::invalid_argument("LossChannel: eta must lie in (0, 1]");
  }
};

std::vector<Matrix> loss_kraus_operators(const FockSpace& space, const LossChannel& channel);

/// Completeness residual || sum K^dag K - I ||_max on the guarded subspace.
double kraus_completeness_residual(const FockSpace& space, const LossChannel& channel);

QuantumState apply_loss(const FockSpace& space, const QuantumState& state,
                        const LossChannel& channel);

/// Gaussian-wrapped phase average of cat states. The wrapped weight is
/// truncated at +-6 sigma (wrapping error < 1e-12); sigma > 5 is uniform.
struct PhaseDiffusion {
  double sigma;
  double theta0 = 0.0;
  int quad_points = 256;

  PhaseDiffusion(double sigma_, double theta0_ = 0.0, int quad_points_ = 256)
      : sigma(sigma_), theta0(theta0_), quad_points(quad_points_) {
    if (sigma <= 0.0) throw std::invalid_argument("PhaseDiffusion: sigma must be > 0");
    if (quad_points < 64)
      throw std::invalid_argument("PhaseDiffusion: quad_points must be >= 64");
  }
};

/// Wrapped-Gaussian weight at angle theta.
double wrapped_gaussian_weight(double theta, const PhaseDiffusion& diff);

QuantumState apply_phase_diffusion(const FockSpace& space, Complex alpha, int branch,
                                   const PhaseDiffusion& diff);

/// xi and witness expectation vs transmissivity for both parity branches.
/// Columns: eta, branch, xi, witness_expectation. Rows sorted by eta.
SweepResult robustness_scan(const FockSpace& space, Complex alpha,
                            std::vector<double> eta_grid,
                            const OptimizerConfig& cfg = {});

}  // namespace catkit

#endif
