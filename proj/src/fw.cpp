#include "catkit/fw.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include "catkit/fock.hpp"

namespace catkit {

namespace {

void check_involution(const Matrix& beta) {
  if (beta.rows() != beta.cols())
    throw std::invalid_argument("grading: beta must be square");
  Matrix r = beta * beta - Matrix::Identity(beta.rows(), beta.cols());
  if (max_norm(r) > kAlgebraTol || !is_hermitian(beta))
    throw NotInvolution("grading: beta is not a Hermitian involution");
}

}  // namespace

GradedHamiltonian::GradedHamiltonian(Matrix beta, double mass, Matrix even_part,
                                     Matrix odd_part)
    : beta_(std::move(beta)), mass_(mass), even_(std::move(even_part)),
      odd_(std::move(odd_part)) {
  check_involution(beta_);
  if (mass_ <= 0.0) throw ZeroMass("GradedHamiltonian: mass must be positive");
  const auto n = beta_.rows();
  if (even_.rows() != n || even_.cols() != n || odd_.rows() != n || odd_.cols() != n)
    throw DimensionMismatch("GradedHamiltonian: block dimensions disagree");
  double scale = std::max({1.0, max_norm(even_), max_norm(odd_)});
  if (max_norm(commutator(beta_, even_)) > kAlgebraTol * scale)
    throw std::invalid_argument("GradedHamiltonian: even part does not commute with beta");
  if (max_norm(anticommutator(beta_, odd_)) > kAlgebraTol * scale)
    throw std::invalid_argument("GradedHamiltonian: odd part does not anticommute with beta");
  if (!is_hermitian(total(), kAlgebraTol * std::max(1.0, mass_) * 10))
    throw std::invalid_argument("GradedHamiltonian: total Hamiltonian not Hermitian");
}

std::pair<Matrix, Matrix> grade_split(const Matrix& h, const Matrix& beta) {
  check_involution(beta);
  if (h.rows() != beta.rows() || h.cols() != beta.cols())
    throw DimensionMismatch("grade_split: dimension mismatch");
  Matrix conj = beta * h * beta;
  return {0.5 * (h + conj), 0.5 * (h - conj)};
}

Matrix fw_generator_first(const GradedHamiltonian& gh) {
  return (-kI / (2.0 * gh.mass())) * (gh.beta() * gh.odd_part());
}

Matrix fw_generator_second(const GradedHamiltonian& gh) {
  double m = gh.mass();
  return (-kI / (8.0 * m * m)) *
         (gh.beta() * commutator(gh.odd_part(), gh.even_part()));
}

FwResult fw_iterate(const GradedHamiltonian& gh, int max_iter, double tol) {
  if (max_iter < 1) throw std::invalid_argument("fw_iterate: max_iter must be >= 1");
  const int n = gh.dim();
  const Matrix& beta = gh.beta();
  Matrix h = gh.total();
  Matrix unitary = Matrix::Identity(n, n);
  std::vector<FwIterationRecord> log;

  bool converged = false;
  for (int it = 0; it < max_iter; ++it) {
    auto [even, odd] = grade_split(h, beta);
    double odd_norm = max_norm(odd);
    if (odd_norm <= tol) {
      converged = true;
      break;
    }
    Matrix s = (-kI / (2.0 * gh.mass())) * (beta * odd);  // Hermitian, odd
    Matrix u = matrix_exponential(s, kI);
    h = u * h * u.adjoint();
    unitary = u * unitary;
    double odd_after = max_norm(grade_split(h, beta).second);
    log.push_back({it, std::move(s), odd_norm, odd_after});
  }
  if (!converged && max_norm(grade_split(h, beta).second) <= tol) converged = true;

  auto [even, odd] = grade_split(h, beta);
  // Fold the beta*m block back out of the even part.
  Matrix even_rest = even - gh.mass() * beta;
  FwResult res{std::move(unitary),
               GradedHamiltonian(beta, gh.mass(), std::move(even_rest), std::move(odd)),
               std::move(log), converged};
  return res;
}

double fw_kinetic_series(double p, double m, int order) {
  if (m <= 0.0) throw ZeroMass("fw_kinetic_series: mass must be positive");
  if (std::abs(p) >= m)
    throw DivergentRegime("fw_kinetic_series: |p| >= m is outside convergence");
  if (order < 0 || order > 10)
    throw std::invalid_argument("fw_kinetic_series: order must lie in [0, 10]");
  // m*(1 + u/2 - u^2/8 + u^3/16 - 5u^4/128 + 7u^5/256), u = (p/m)^2
  static const double coeff[6] = {1.0,        1.0 / 2.0,  -1.0 / 8.0,
                                  1.0 / 16.0, -5.0 / 128.0, 7.0 / 256.0};
  double u = (p / m) * (p / m);
  double sum = 0.0, upow = 1.0;
  for (int k = 0; 2 * k <= order; ++k) {
    sum += coeff[k] * upow;
    upow *= u;
  }
  return m * sum;
}

Matrix dirac_beta() {
  Matrix b = Matrix::Zero(4, 4);
  b(0, 0) = b(1, 1) = 1.0;
  b(2, 2) = b(3, 3) = -1.0;
  return b;
}

Matrix dirac_alpha_x() {
  Matrix a = Matrix::Zero(4, 4);
  a(0, 3) = a(1, 2) = a(2, 1) = a(3, 0) = 1.0;
  return a;
}

Matrix dirac_gamma(int mu) {
  if (mu < 0 || mu > 3) throw std::invalid_argument("dirac_gamma: mu must be 0..3");
  if (mu == 0) return dirac_beta();
  Matrix sigma = Matrix::Zero(2, 2);
  if (mu == 1) {
    sigma(0, 1) = 1.0;
    sigma(1, 0) = 1.0;
  } else if (mu == 2) {
    sigma(0, 1) = -kI;
    sigma(1, 0) = kI;
  } else {
    sigma(0, 0) = 1.0;
    sigma(1, 1) = -1.0;
  }
  Matrix g = Matrix::Zero(4, 4);
  g.topRightCorner(2, 2) = sigma;
  g.bottomLeftCorner(2, 2) = -sigma;
  return g;
}

GradedHamiltonian free_dirac_hamiltonian(double p, double m) {
  Matrix beta = dirac_beta();
  Matrix odd = p * dirac_alpha_x();
  return GradedHamiltonian(std::move(beta), m, Matrix::Zero(4, 4), std::move(odd));
}

GradedHamiltonian lattice_dirac_hamiltonian(double m, int n_sites, double dx,
                                            const std::function<double(double)>& potential) {
  if (n_sites < 3) throw std::invalid_argument("lattice_dirac_hamiltonian: n_sites < 3");
  if (dx <= 0.0) throw std::invalid_argument("lattice_dirac_hamiltonian: dx must be > 0");
  Matrix p_fd = Matrix::Zero(n_sites, n_sites);
  const Complex c = -kI / (2.0 * dx);
  for (int j = 0; j < n_sites; ++j) {
    p_fd(j, (j + 1) % n_sites) = c;
    p_fd((j + 1) % n_sites, j) = -c;
  }
  Matrix v = Matrix::Zero(n_sites, n_sites);
  for (int j = 0; j < n_sites; ++j) v(j, j) = potential(j * dx);

  Matrix id_sites = Matrix::Identity(n_sites, n_sites);
  Matrix beta = Eigen::kroneckerProduct(dirac_beta(), id_sites);
  Matrix odd = Eigen::kroneckerProduct(dirac_alpha_x(), p_fd);
  Matrix even = Eigen::kroneckerProduct(Matrix::Identity(4, 4), v);
  return GradedHamiltonian(std::move(beta), m, std::move(even), std::move(odd));
}

}  // namespace catkit
