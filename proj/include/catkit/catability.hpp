#ifndef CATKIT_CATABILITY_HPP
#define CATKIT_CATABILITY_HPP

#include "catkit/fock.hpp"
#include "catkit/optimize.hpp"

namespace catkit {

/// Phase-sensitive cat witness
///   O = (a^dag^2 - conj(alpha)^2 e^{-2i phi})(a^2 - alpha^2 e^{2i phi})
///       + gamma (1 -+ Pi).
/// Positive semidefinite; its kernel contains the matched-parity cat.
struct WitnessSpec {
  Complex alpha;
  double gamma = 1.0;
  int branch = +1;   // +1 selects even cats (1 - Pi), -1 odd (1 + Pi)
  double phi = 0.0;  // measurement-frame orientation
};

/// O split as quadratic + gamma * parity_gap, for gamma scans.
struct WitnessParts {
  Matrix quadratic;   // (a^dag^2 - ...)(a^2 - ...), PSD
  Matrix parity_gap;  // 1 -+ Pi, PSD
};

WitnessParts witness_parts(const FockSpace& space, const WitnessSpec& spec);
Matrix witness_operator(const FockSpace& space, const WitnessSpec& spec);

/// Explicit Fock-basis evaluation of Tr(rho O): the diagonal n(n-1) sum, the
/// two rho_{n,n+-2} pair-coherence sums, |alpha|^4, and the parity sum.
/// Independent of the matrix-trace route.
double witness_expectation_fock(const QuantumState& rho, const WitnessSpec& spec);

/// Same expansion evaluated on pure-state amplitudes; O(n_cut).
double witness_expectation_pure(const CVector& psi, const WitnessSpec& spec);

/// Guarded max-norm of R(chi) O_phi R(chi)^dag - O_{phi+chi}.
double phase_covariance_residual(const FockSpace& space, const WitnessSpec& spec,
                                 double chi);

/// Pure displaced squeezed vacuum D(beta) S(r e^{i phi_sq}) |0>.
struct GaussianParams {
  Complex beta;
  double r = 0.0;
  double phi_sq = 0.0;
};

QuantumState gaussian_state(const FockSpace& space, const GaussianParams& params);

/// Fock amplitudes of the same state through the Bogoliubov three-term
/// recurrence; returns a normalized vector and reports the norm captured by
/// the truncation (1 - tail mass) through captured_out.
CVector gaussian_state_amplitudes(const FockSpace& space, const GaussianParams& params,
                                  double* captured_out = nullptr);

struct OptimizerConfig {
  int multistarts = 8;
  int max_iter = 400;
  double f_tol = 1e-9;
  double r_max = 2.0;
  double beta_margin = 3.0;    // search box |beta| <= |alpha| + beta_margin
  int gamma_grid = 60;         // log-spaced gamma points
  double gamma_lo = 1e-3;
  double gamma_hi = 1e3;
};

struct GaussianMinimum {
  double value = 0.0;
  GaussianParams argmin;
};

/// min over pure Gaussian states of <O(spec)>; mixed Gaussians are convex
/// mixtures of pure ones of equal squeezing, and the target is linear in rho,
/// so the pure restriction loses nothing.
GaussianMinimum gaussian_minimum(const FockSpace& space, const WitnessSpec& spec,
                                 const OptimizerConfig& cfg = {});

struct XiResult {
  double xi = 0.0;
  double gamma_star = 0.0;
  GaussianParams gaussian_star;
  double numerator = 0.0;
  double denominator = 0.0;
};

/// Catability: min over gamma of Tr(O rho) / min_G Tr(O rho_G).
/// 0 = ideal cat; >= 1 = not certified.
XiResult xi_measure(const FockSpace& space, const QuantumState& state, Complex alpha,
                    int branch, const OptimizerConfig& cfg = {});

}  // namespace catkit

#endif
