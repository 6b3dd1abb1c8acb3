#include "catkit/su11.hpp"

namespace catkit {

Su11Generators make_su11(const FockSpace& space) {
  LadderOperators ops = make_ladder(space);
  Su11Generators gen{Matrix(), Matrix(), Matrix(), space};
  gen.k_plus = 0.5 * ops.raising * ops.raising;
  gen.k_minus = 0.5 * ops.lowering * ops.lowering;
  gen.k_zero = 0.5 * (ops.number + 0.5 * Matrix::Identity(space.n_cut, space.n_cut));
  return gen;
}

Matrix casimir_quadratic(const Su11Generators& gen) {
  return gen.k_zero * gen.k_zero -
         0.5 * (gen.k_plus * gen.k_minus + gen.k_minus * gen.k_plus);
}

double casimir_reduction_residual(const Su11Generators& gen) {
  int n = gen.space.n_cut;
  Matrix lhs = gen.k_plus * gen.k_minus;
  Matrix rhs = gen.k_zero * (gen.k_zero - Matrix::Identity(n, n)) +
               (3.0 / 16.0) * Matrix::Identity(n, n);
  return guarded_max_norm(lhs - rhs, gen.space);
}

Matrix squeeze_operator(const Su11Generators& gen, Complex zeta) {
  if (std::abs(zeta) > 2.0)
    throw TruncationError("squeeze_operator: |zeta| = " + std::to_string(std::abs(zeta)) +
                          " exceeds the truncation-safe bound 2");
  Matrix generator = zeta * gen.k_plus - std::conj(zeta) * gen.k_minus;
  return matrix_exponential(generator);
}

QuadraturePair quadrature(const FockSpace& space, double phi) {
  LadderOperators ops = make_ladder(space);
  Complex ph = std::exp(kI * phi);
  QuadraturePair q;
  q.x = (ops.lowering * std::conj(ph) + ops.raising * ph) / std::sqrt(2.0);
  q.p = (ops.lowering * std::conj(ph) - ops.raising * ph) / (kI * std::sqrt(2.0));
  return q;
}

}  // namespace catkit
