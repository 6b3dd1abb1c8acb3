#ifndef CATKIT_FOCK_HPP
#define CATKIT_FOCK_HPP

#include "catkit/types.hpp"

namespace catkit {

struct LadderOperators {
  Matrix lowering;   // a|n> = sqrt(n)|n-1>
  Matrix raising;    // a^dag|n> = sqrt(n+1)|n+1>, zero at the truncation edge
  Matrix number;     // a^dag a, exactly diagonal 0..n_cut-1
};

LadderOperators make_ladder(const FockSpace& space);

/// Superposed coherent state |alpha e^{i theta}> +/- |-alpha e^{i theta}>.
struct CatSpec {
  Complex alpha;
  int parity = +1;     // +1 even, -1 odd
  double theta = 0.0;  // phase-space orientation
};

QuantumState coherent_state(const FockSpace& space, Complex beta);
QuantumState cat_state(const FockSpace& space, const CatSpec& spec);

/// Photon-number parity (-1)^n; involution.
Matrix parity_operator(const FockSpace& space);

/// e^{i phi n}; conjugation rotates a -> e^{-i phi} a and a^2 -> e^{-2i phi} a^2.
Matrix phase_rotation(const FockSpace& space, double phi);

/// exp(scale*op). Hermitian and skew-Hermitian arguments go through an exact
/// eigendecomposition; anything else falls back to scaling-and-squaring.
Matrix matrix_exponential(const Matrix& op, Complex scale = Complex(1.0, 0.0));

/// Wigner function at the phase-space origin, (2/pi) Tr(rho Pi).
double wigner_origin(const QuantumState& state);

}  // namespace catkit

#endif
