#include "catkit/fock.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace catkit {

QuantumState QuantumState::from_vector(CVector v) {
  int dim = static_cast<int>(v.size());
  if (dim == 0) throw std::invalid_argument("QuantumState: empty vector");
  double norm = v.norm();
  if (std::abs(norm - 1.0) > 1e-10)
    throw std::invalid_argument("QuantumState: vector norm " + std::to_string(norm) +
                                " is not 1 within 1e-10");
  return QuantumState(Kind::Vector, std::move(v), Matrix(), dim);
}

QuantumState QuantumState::from_density(Matrix rho) {
  if (rho.rows() != rho.cols() || rho.rows() == 0)
    throw std::invalid_argument("QuantumState: density matrix must be square");
  int dim = static_cast<int>(rho.rows());
  if (!is_hermitian(rho, 1e-10))
    throw std::invalid_argument("QuantumState: density matrix not Hermitian");
  double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > 1e-10)
    throw std::invalid_argument("QuantumState: trace " + std::to_string(tr) +
                                " is not 1 within 1e-10");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw std::invalid_argument("QuantumState: density matrix not positive semidefinite");
  return QuantumState(Kind::Density, CVector(), std::move(rho), dim);
}

const CVector& QuantumState::vec() const {
  if (kind_ != Kind::Vector) throw std::logic_error("QuantumState: not a vector state");
  return vec_;
}

const Matrix& QuantumState::rho() const {
  if (kind_ != Kind::Density) throw std::logic_error("QuantumState: not a density matrix");
  return rho_;
}

Matrix QuantumState::density() const {
  if (kind_ == Kind::Density) return rho_;
  return vec_ * vec_.adjoint();
}

Complex expectation(const QuantumState& state, const Matrix& op) {
  if (op.rows() != state.dim() || op.cols() != state.dim())
    throw DimensionMismatch("expectation: operator is " + std::to_string(op.rows()) + "x" +
                            std::to_string(op.cols()) + ", state dim " +
                            std::to_string(state.dim()));
  if (state.is_vector()) return state.vec().dot(op * state.vec());
  return (state.rho() * op).trace();
}

double expectation_real(const QuantumState& state, const Matrix& op) {
  Complex v = expectation(state, op);
  double scale = std::max(1.0, std::abs(v));
  if (std::abs(v.imag()) > 1e-10 * scale)
    throw std::logic_error("expectation_real: imaginary residue " +
                           std::to_string(v.imag()) + " for a supposedly Hermitian observable");
  return v.real();
}

double fidelity(const QuantumState& a, const QuantumState& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("fidelity: dimension mismatch");
  if (a.is_vector() && b.is_vector()) return std::norm(a.vec().dot(b.vec()));
  if (a.is_vector()) return a.vec().dot(b.rho() * a.vec()).real();
  if (b.is_vector()) return b.vec().dot(a.rho() * b.vec()).real();
  throw std::logic_error("fidelity: density-density fidelity not supported");
}

LadderOperators make_ladder(const FockSpace& space) {
  int n = space.n_cut;
  Matrix a = Matrix::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  LadderOperators ops;
  ops.lowering = a;
  ops.raising = a.adjoint();
  ops.number = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) ops.number(k, k) = static_cast<double>(k);
  return ops;
}

namespace {

// Unnormalized coherent amplitudes beta^n/sqrt(n!), with the e^{-|beta|^2/2}
// prefactor folded in for conditioning.
CVector coherent_amplitudes(int n_cut, Complex beta) {
  CVector v(n_cut);
  v(0) = std::exp(-0.5 * std::norm(beta));
  for (int n = 1; n < n_cut; ++n) v(n) = v(n - 1) * beta / std::sqrt(static_cast<double>(n));
  return v;
}

}  // namespace

QuantumState coherent_state(const FockSpace& space, Complex beta) {
  require_adequate(space, std::abs(beta));
  CVector v = coherent_amplitudes(space.n_cut, beta);
  v.normalize();
  return QuantumState::from_vector(std::move(v));
}

QuantumState cat_state(const FockSpace& space, const CatSpec& spec) {
  require_adequate(space, std::abs(spec.alpha));
  if (spec.parity != 1 && spec.parity != -1)
    throw std::invalid_argument("cat_state: parity must be +1 or -1");
  if (spec.parity == -1 && std::abs(spec.alpha) < 1e-8)
    throw DegenerateCatError("cat_state: odd cat undefined at alpha = 0");
  Complex displacement = spec.alpha * std::exp(kI * spec.theta);
  CVector v = coherent_amplitudes(space.n_cut, displacement) +
              static_cast<double>(spec.parity) *
                  coherent_amplitudes(space.n_cut, -displacement);
  v.normalize();
  return QuantumState::from_vector(std::move(v));
}

Matrix parity_operator(const FockSpace& space) {
  Matrix pi = Matrix::Zero(space.n_cut, space.n_cut);
  for (int n = 0; n < space.n_cut; ++n) pi(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
  return pi;
}

Matrix phase_rotation(const FockSpace& space, double phi) {
  Matrix r = Matrix::Zero(space.n_cut, space.n_cut);
  for (int n = 0; n < space.n_cut; ++n) r(n, n) = std::exp(kI * (phi * n));
  return r;
}

Matrix matrix_exponential(const Matrix& op, Complex scale) {
  if (!op.allFinite() || !std::isfinite(scale.real()) || !std::isfinite(scale.imag()))
    throw NonFiniteError("matrix_exponential: non-finite input");
  Matrix a = scale * op;
  double s = std::max(1.0, max_norm(a));
  if (max_norm(a - a.adjoint()) <= kAlgebraTol * s) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(a);
    CVector factors(es.eigenvalues().size());
    for (int k = 0; k < factors.size(); ++k) factors(k) = std::exp(es.eigenvalues()(k));
    return es.eigenvectors() * factors.asDiagonal() * es.eigenvectors().adjoint();
  }
  if (max_norm(a + a.adjoint()) <= kAlgebraTol * s) {
    // a = iH with H Hermitian; exact unitary via eigendecomposition of H.
    Matrix h = -kI * a;
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    CVector phases(es.eigenvalues().size());
    for (int k = 0; k < phases.size(); ++k) phases(k) = std::exp(kI * es.eigenvalues()(k));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  }
  return a.exp();
}

double wigner_origin(const QuantumState& state) {
  Matrix pi = Matrix::Zero(state.dim(), state.dim());
  for (int n = 0; n < state.dim(); ++n) pi(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
  return 2.0 / M_PI * expectation_real(state, pi);
}

}  // namespace catkit
