#ifndef CATKIT_TYPES_HPP
#define CATKIT_TYPES_HPP

#include <Eigen/Dense>
#include <complex>

#include "catkit/errors.hpp"

namespace catkit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

// Tolerance hierarchy: exact algebraic identities vs truncation-limited results.
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kTruncTol = 1e-8;

inline double max_norm(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
inline Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

inline bool is_hermitian(const Matrix& m, double tol = kAlgebraTol) {
  return max_norm(m - m.adjoint()) <= tol;
}

/// Truncated Fock space |0>..|n_cut-1> with a guard band of top levels
/// excluded from algebraic checks (truncation breaks identities there).
struct FockSpace {
  int n_cut;
  int guard_band;

  explicit FockSpace(int n_cut_, int guard_band_ = 4)
      : n_cut(n_cut_), guard_band(guard_band_) {
    if (n_cut < 4) throw std::invalid_argument("FockSpace: n_cut must be >= 4");
    if (guard_band < 0 || 2 * guard_band >= n_cut)
      throw std::invalid_argument("FockSpace: guard_band must satisfy 0 <= guard_band < n_cut/2");
  }

  int dim() const { return n_cut; }
  /// Levels 0..guarded_dim()-1 are trusted for algebraic identities.
  int guarded_dim() const { return n_cut - guard_band; }
};

/// Max-norm restricted to the guarded rows/columns.
inline double guarded_max_norm(const Matrix& m, const FockSpace& space) {
  int g = space.guarded_dim();
  return m.topLeftCorner(g, g).cwiseAbs().maxCoeff();
}

/// Smallest n_cut adequate for amplitude magnitude `amp`; keeps the Poisson
/// tail mass beyond the truncation below ~1e-12 for desk-scale amplitudes.
inline int required_n_cut(double amp) {
  return static_cast<int>(std::ceil(amp * amp + 8.0 * amp + 20.0));
}

inline void require_adequate(const FockSpace& space, double amp) {
  int need = required_n_cut(amp);
  if (space.n_cut < need)
    throw TruncationError("n_cut=" + std::to_string(space.n_cut) +
                          " inadequate for amplitude " + std::to_string(amp) +
                          " (need >= " + std::to_string(need) + ")");
}

/// Normalized state vector or unit-trace positive density matrix.
class QuantumState {
 public:
  enum class Kind { Vector, Density };

  static QuantumState from_vector(CVector v);
  static QuantumState from_density(Matrix rho);

  Kind kind() const { return kind_; }
  bool is_vector() const { return kind_ == Kind::Vector; }
  int dim() const { return dim_; }

  const CVector& vec() const;
  const Matrix& rho() const;

  /// Density matrix view regardless of kind (|psi><psi| for vectors).
  Matrix density() const;

 private:
  QuantumState(Kind kind, CVector v, Matrix rho, int dim)
      : kind_(kind), vec_(std::move(v)), rho_(std::move(rho)), dim_(dim) {}

  Kind kind_;
  CVector vec_;
  Matrix rho_;
  int dim_;
};

/// <psi|op|psi> or Tr(rho op).
Complex expectation(const QuantumState& state, const Matrix& op);

/// Expectation of a Hermitian observable; rejects significant imaginary residue.
double expectation_real(const QuantumState& state, const Matrix& op);

double fidelity(const QuantumState& a, const QuantumState& b);

}  // namespace catkit

#endif
