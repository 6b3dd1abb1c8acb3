#ifndef CATKIT_FW_HPP
#define CATKIT_FW_HPP

#include <functional>
#include <vector>

#include "catkit/types.hpp"

namespace catkit {

/// H = beta m + E + O over a Z2 grading: beta is a Hermitian involution,
/// [beta, E] = 0, {beta, O} = 0, H Hermitian.
class GradedHamiltonian {
 public:
  GradedHamiltonian(Matrix beta, double mass, Matrix even_part, Matrix odd_part);

  const Matrix& beta() const { return beta_; }
  double mass() const { return mass_; }
  const Matrix& even_part() const { return even_; }
  const Matrix& odd_part() const { return odd_; }
  int dim() const { return static_cast<int>(beta_.rows()); }

  Matrix total() const { return mass_ * beta_ + even_ + odd_; }

 private:
  Matrix beta_;
  double mass_;
  Matrix even_;
  Matrix odd_;
};

/// Splits H into (H + beta H beta)/2 and (H - beta H beta)/2.
std::pair<Matrix, Matrix> grade_split(const Matrix& h, const Matrix& beta);

/// S1 = -(i/2m) beta O; cancels the leading odd term, i[S1, beta m] = -O.
Matrix fw_generator_first(const GradedHamiltonian& gh);

/// S2 = -(i/8m^2) beta [O, E]; vanishes when the odd and even parts commute.
Matrix fw_generator_second(const GradedHamiltonian& gh);

struct FwIterationRecord {
  int iteration;
  Matrix generator;
  double odd_before;
  double odd_after;
};

struct FwResult {
  Matrix unitary;
  GradedHamiltonian transformed;
  std::vector<FwIterationRecord> log;
  bool converged;
};

/// Fixed-point iteration of the odd-sector removal: S is re-derived from the
/// current odd part each step and the conjugation uses the exact matrix
/// exponential, so the spectrum is preserved to rounding.
FwResult fw_iterate(const GradedHamiltonian& gh, int max_iter = 12, double tol = 1e-10);

/// Partial sum of m + p^2/2m - p^4/8m^3 + ...; converges to sqrt(p^2+m^2)
/// for |p| < m. `order` is the highest power of p retained.
double fw_kinetic_series(double p, double m, int order = 10);

/// 4x4 free Dirac Hamiltonian alpha_x p + beta m, standard representation.
GradedHamiltonian free_dirac_hamiltonian(double p, double m);

/// Dirac + scalar potential on a uniform periodic 1-D grid (central
/// differences); beta = gamma0 x I, odd = alpha_x x p_fd, even = I4 x V.
GradedHamiltonian lattice_dirac_hamiltonian(double m, int n_sites, double dx,
                                            const std::function<double(double)>& potential);

Matrix dirac_beta();
Matrix dirac_alpha_x();
/// gamma^mu in the standard representation, mu in {0,1,2,3}.
Matrix dirac_gamma(int mu);

}  // namespace catkit

#endif
