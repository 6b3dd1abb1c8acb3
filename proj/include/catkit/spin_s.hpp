#ifndef CATKIT_SPIN_S_HPP
#define CATKIT_SPIN_S_HPP

#include "catkit/fock.hpp"

namespace catkit {

/// su(2) spin matrices in the |s,m> basis (m = s..-s) plus a configurable
/// parity involution, default eigenvalues (-1)^{s-m}.
struct SpinSpace {
  double s;
  int dim;
  Matrix sx, sy, sz;
  Matrix s_squared;
  Matrix parity;
};

SpinSpace make_spin_space(double s);

/// O_s = C(alpha) x I + gamma (1 -+ Pi x P_s) + lambda I x S^2 on the
/// oscillator (x) spin product space; the three sectors commute.
struct SpinCatWitnessSpec {
  Complex alpha;
  double gamma = 1.0;
  double lambda = 1.0;
  int branch = +1;
  double s = 0.5;
};

Matrix spin_cat_witness(const FockSpace& space, const SpinSpace& spin,
                        const SpinCatWitnessSpec& spec);

/// |beta^2-alpha^2|^2 + gamma(1 -+ e^{-2|beta|^2} pi_spin) + lambda s(s+1)
/// for a coherent (x) spin product state.
double spin_cat_expectation_closed_form(Complex beta, double pi_spin,
                                        const SpinCatWitnessSpec& spec);

/// Matrix expectation on coherent(beta) (x) chi.
double spin_cat_expectation_numeric(const FockSpace& space, const SpinSpace& spin,
                                    const SpinCatWitnessSpec& spec, Complex beta,
                                    const CVector& chi);

/// Matrix expectation on an arbitrary (possibly entangled) product-space state.
double spin_cat_expectation_state(const FockSpace& space, const SpinSpace& spin,
                                  const SpinCatWitnessSpec& spec, const CVector& state);

/// Measured guarded commutator norm max_i ||[C(alpha), K_i]||; nonzero for
/// alpha != 0 (the deformation commutes with the SU(1,1) orbit map, not with
/// the generators themselves).
double deformation_su11_commutator_norm(const FockSpace& space, Complex alpha);

}  // namespace catkit

#endif
