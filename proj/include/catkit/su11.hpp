#ifndef CATKIT_SU11_HPP
#define CATKIT_SU11_HPP

#include "catkit/fock.hpp"

namespace catkit {

/// Single-mode SU(1,1) generators K+ = a^dag^2/2, K- = a^2/2, K0 = (n+1/2)/2.
/// Commutation relations [K0,K+-] = +-K+-, [K+,K-] = -2K0 hold on the guarded
/// subspace; truncation corrupts the top levels.
struct Su11Generators {
  Matrix k_plus;
  Matrix k_minus;
  Matrix k_zero;
  FockSpace space;
};

Su11Generators make_su11(const FockSpace& space);

/// K0^2 - (K+K- + K-K+)/2; constant -3/16 on the guarded subspace.
Matrix casimir_quadratic(const Su11Generators& gen);

/// Guarded max-norm of K+K- - K0(K0-1) + C with C = -3/16.
double casimir_reduction_residual(const Su11Generators& gen);

/// S(zeta) = exp(zeta K+ - conj(zeta) K-). |zeta| <= 2 keeps the variance
/// growth inside default spaces.
Matrix squeeze_operator(const Su11Generators& gen, Complex zeta);

struct QuadraturePair {
  Matrix x;  // (a e^{-i phi} + a^dag e^{i phi})/sqrt(2)
  Matrix p;  // (a e^{-i phi} - a^dag e^{i phi})/(i sqrt(2))
};

QuadraturePair quadrature(const FockSpace& space, double phi);

}  // namespace catkit

#endif
