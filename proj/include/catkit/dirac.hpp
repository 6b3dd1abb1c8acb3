#ifndef CATKIT_DIRAC_HPP
#define CATKIT_DIRAC_HPP

#include <vector>

#include "catkit/fock.hpp"

namespace catkit {

/// Parameters of a relativistic fermionic cat: oscillator amplitude alpha,
/// parity branch, witness weight gamma, and the kinematic pair (m, p) with
/// an external trap frequency omega for revival analysis.
struct DiracCatSpec {
  Complex alpha;
  int branch = +1;
  double gamma = 1.0;
  double mass = 1.0;
  double momentum = 0.0;
  double omega = 1.0;

  double energy() const { return std::hypot(momentum, mass); }
};

/// Normalized positive-energy spinor for 1-D momentum (sigma.p -> sigma_z p),
/// standard representation; spin = +1 or -1 selects chi_s.
CVector positive_energy_spinor(double p, double m, int spin = +1);

struct ParityFactors {
  double spinorial;  // <gamma^0> on the spinor = m/E
  double orbital;    // cat parity expectation, exactly +-1
  double product;
};

ParityFactors dirac_parity_expectations(const DiracCatSpec& spec, const CVector& spinor);

/// gamma [1 -+ (m/E) Pi_orb] with Pi_orb = (+-1 + e^{-2|a|^2})/(1 +- e^{-2|a|^2}).
double relativistic_catability_closed_form(const DiracCatSpec& spec);

/// Builds C_D = (a^2-alpha^2)^dag(a^2-alpha^2) x I4 + gamma(1 -+ Pi x gamma^0)
/// on the Fock (x) spinor product space and evaluates it on cat (x) u_s(p).
double relativistic_catability_numeric(const FockSpace& space, const DiracCatSpec& spec);

/// Partial sum of 1 - p^2/2m^2 + 3p^4/8m^4 - 5p^6/16m^6 + ...; |p| < m.
double m_over_e_series(double p, double m, int order);

/// T_rev = 4 pi m / omega^2.
double revival_time(double m, double omega);

/// Evolves a coherent state under E_n = m + w(n+1/2) - w^2/2m (n+1/2)^2 and
/// returns the time of the first interior autocorrelation peak >= 0.9 in
/// [0.5 T_rev, 1.5 T_rev].
double revival_detect(double m, double omega, Complex alpha, int n_cut = 64);

/// |sum_n w_n e^{-i E_n t}|^2 for a diagonal spectrum.
double autocorrelation(const std::vector<double>& weights, const std::vector<double>& energies,
                       double t);

/// <psi| e^{iHt} alpha_x e^{-iHt} |psi> sampled on n_samples points of [0, t_max]
/// for the 4x4 free Dirac H.
std::vector<double> zitterbewegung_signal(double m, double p, double t_max, int n_samples,
                                          const CVector& initial);

/// Dominant discrete-Fourier angular frequency of the default
/// positive/negative-energy superposition signal; equals 2E within one bin.
double zitterbewegung_frequency(double m, double p, double t_max, int n_samples);

/// (1/2)[1 + <p^2>/2m^2], the leading-order relativistic enlargement.
double relativistic_uncertainty_product(double p2_expect, double m);

}  // namespace catkit

#endif
