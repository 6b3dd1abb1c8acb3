#include "catkit/spin_s.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include "catkit/su11.hpp"

namespace catkit {

SpinSpace make_spin_space(double s) {
  double doubled = 2.0 * s;
  if (s < 0.0 || std::abs(doubled - std::round(doubled)) > 1e-12)
    throw InvalidSpin("make_spin_space: 2s must be a non-negative integer");
  const int dim = static_cast<int>(std::round(doubled)) + 1;

  SpinSpace sp;
  sp.s = s;
  sp.dim = dim;
  sp.sz = Matrix::Zero(dim, dim);
  Matrix s_plus = Matrix::Zero(dim, dim);
  // Row k holds m = s - k.
  for (int k = 0; k < dim; ++k) sp.sz(k, k) = s - k;
  for (int k = 1; k < dim; ++k) {
    double m = s - k;  // S+|s,m> = sqrt(s(s+1) - m(m+1)) |s,m+1>
    s_plus(k - 1, k) = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
  }
  Matrix s_minus = s_plus.adjoint();
  sp.sx = 0.5 * (s_plus + s_minus);
  sp.sy = (s_plus - s_minus) / (2.0 * kI);
  sp.s_squared = sp.sx * sp.sx + sp.sy * sp.sy + sp.sz * sp.sz;
  sp.parity = Matrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) sp.parity(k, k) = (k % 2 == 0) ? 1.0 : -1.0;  // (-1)^{s-m}
  return sp;
}

Matrix spin_cat_witness(const FockSpace& space, const SpinSpace& spin,
                        const SpinCatWitnessSpec& spec) {
  if (spec.branch != 1 && spec.branch != -1)
    throw std::invalid_argument("spin_cat_witness: branch must be +1 or -1");
  if (spec.gamma <= 0.0 || spec.lambda <= 0.0)
    throw std::invalid_argument("spin_cat_witness: gamma and lambda must be positive");
  require_adequate(space, std::abs(spec.alpha));

  const int n = space.n_cut;
  LadderOperators ops = make_ladder(space);
  Matrix shifted = ops.lowering * ops.lowering -
                   spec.alpha * spec.alpha * Matrix::Identity(n, n);
  Matrix deformation = shifted.adjoint() * shifted;

  Matrix id_spin = Matrix::Identity(spin.dim, spin.dim);
  Matrix id_full = Matrix::Identity(n * spin.dim, n * spin.dim);
  Matrix parity_full = Eigen::kroneckerProduct(parity_operator(space), spin.parity);
  return Eigen::kroneckerProduct(deformation, id_spin) +
         spec.gamma * (id_full - static_cast<double>(spec.branch) * parity_full) +
         spec.lambda * Eigen::kroneckerProduct(Matrix::Identity(n, n), spin.s_squared);
}

double spin_cat_expectation_closed_form(Complex beta, double pi_spin,
                                        const SpinCatWitnessSpec& spec) {
  if (std::abs(pi_spin) > 1.0 + 1e-12)
    throw std::invalid_argument("spin_cat_expectation_closed_form: |pi_spin| must be <= 1");
  double osc = std::norm(beta * beta - spec.alpha * spec.alpha);
  double parity = spec.gamma * (1.0 - static_cast<double>(spec.branch) *
                                          std::exp(-2.0 * std::norm(beta)) * pi_spin);
  return osc + parity + spec.lambda * spec.s * (spec.s + 1.0);
}

double spin_cat_expectation_numeric(const FockSpace& space, const SpinSpace& spin,
                                    const SpinCatWitnessSpec& spec, Complex beta,
                                    const CVector& chi) {
  if (chi.size() != spin.dim)
    throw DimensionMismatch("spin_cat_expectation_numeric: chi dimension mismatch");
  CVector chi_n = chi.normalized();
  CVector psi = Eigen::kroneckerProduct(coherent_state(space, beta).vec(), chi_n);
  return spin_cat_expectation_state(space, spin, spec, psi);
}

double spin_cat_expectation_state(const FockSpace& space, const SpinSpace& spin,
                                  const SpinCatWitnessSpec& spec, const CVector& state) {
  if (state.size() != static_cast<Eigen::Index>(space.n_cut) * spin.dim)
    throw DimensionMismatch("spin_cat_expectation_state: state dimension mismatch");
  Matrix o = spin_cat_witness(space, spin, spec);
  return state.dot(o * state).real();
}

double deformation_su11_commutator_norm(const FockSpace& space, Complex alpha) {
  const int n = space.n_cut;
  LadderOperators ops = make_ladder(space);
  Matrix shifted = ops.lowering * ops.lowering - alpha * alpha * Matrix::Identity(n, n);
  Matrix deformation = shifted.adjoint() * shifted;
  Su11Generators gen = make_su11(space);
  double worst = 0.0;
  for (const Matrix* k : {&gen.k_plus, &gen.k_minus, &gen.k_zero})
    worst = std::max(worst, guarded_max_norm(commutator(deformation, *k), space));
  return worst;
}

}  // namespace catkit
