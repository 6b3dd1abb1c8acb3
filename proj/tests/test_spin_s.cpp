#include <doctest.h>

#include <random>
#include <unsupported/Eigen/KroneckerProduct>

#include "catkit/spin_s.hpp"

using namespace catkit;

TEST_CASE("spin matrices") {
  SpinSpace half = make_spin_space(0.5);
  CHECK(half.dim == 2);
  CHECK(half.sz(0, 0).real() == doctest::Approx(0.5));
  CHECK(half.sz(1, 1).real() == doctest::Approx(-0.5));

  SpinSpace one = make_spin_space(1.0);
  CHECK(max_norm(one.s_squared - 2.0 * Matrix::Identity(3, 3)) <= 1e-14);

  SpinSpace threehalf = make_spin_space(1.5);
  CHECK(max_norm(commutator(threehalf.sx, threehalf.sy) - kI * threehalf.sz) <= 1e-13);

  CHECK_THROWS_AS(make_spin_space(0.7), InvalidSpin);
  CHECK_THROWS_AS(make_spin_space(-0.5), InvalidSpin);
}

TEST_CASE("su(2) closure and casimir across spins") {
  for (double s : {0.5, 1.0, 1.5, 2.0, 2.5}) {
    SpinSpace spin = make_spin_space(s);
    CHECK(max_norm(commutator(spin.sx, spin.sy) - kI * spin.sz) <= 1e-13);
    CHECK(max_norm(commutator(spin.sy, spin.sz) - kI * spin.sx) <= 1e-13);
    CHECK(max_norm(commutator(spin.sz, spin.sx) - kI * spin.sy) <= 1e-13);
    CHECK(max_norm(spin.s_squared -
                   s * (s + 1.0) * Matrix::Identity(spin.dim, spin.dim)) <= 1e-13);
    CHECK(max_norm(spin.parity * spin.parity - Matrix::Identity(spin.dim, spin.dim)) ==
          0.0);
  }
}

TEST_CASE("spin-half parity matches the spinor sign structure") {
  SpinSpace half = make_spin_space(0.5);
  CHECK(half.parity(0, 0).real() == doctest::Approx(1.0));
  CHECK(half.parity(1, 1).real() == doctest::Approx(-1.0));
}

TEST_CASE("spin cat witness sectors commute") {
  FockSpace space(32, 4);
  SpinSpace spin = make_spin_space(1.0);
  SpinCatWitnessSpec spec{1.0, 1.0, 0.3, +1, 1.0};

  LadderOperators ops = make_ladder(space);
  Matrix shifted = ops.lowering * ops.lowering - Matrix::Identity(32, 32);
  Matrix deform = Eigen::kroneckerProduct((shifted.adjoint() * shifted).eval(),
                                          Matrix::Identity(3, 3));
  Matrix parity_full = Eigen::kroneckerProduct(parity_operator(space), spin.parity);
  Matrix casimir_full = Eigen::kroneckerProduct(Matrix::Identity(32, 32), spin.s_squared);

  CHECK(max_norm(commutator(deform, parity_full)) <= 1e-12);
  CHECK(max_norm(commutator(deform, casimir_full)) <= 1e-12);
  CHECK(max_norm(commutator(parity_full, casimir_full)) <= 1e-12);

  Matrix o = spin_cat_witness(space, spin, spec);
  CHECK(is_hermitian(o, 1e-12));

  // lower bound lambda s(s+1)
  Eigen::SelfAdjointEigenSolver<Matrix> es(o, Eigen::EigenvaluesOnly);
  CHECK(es.eigenvalues().minCoeff() >= spec.lambda * 2.0 - 1e-9);
}

TEST_CASE("s = 0 reduces to the scalar witness") {
  FockSpace space(32, 4);
  SpinSpace scalar = make_spin_space(0.0);
  SpinCatWitnessSpec spec{1.0, 1.3, 0.7, +1, 0.0};
  Matrix o = spin_cat_witness(space, scalar, spec);

  LadderOperators ops = make_ladder(space);
  Matrix shifted = ops.lowering * ops.lowering - Matrix::Identity(32, 32);
  Matrix expected = shifted.adjoint() * shifted +
                    spec.gamma * (Matrix::Identity(32, 32) - parity_operator(space));
  CHECK(max_norm(o - expected) <= 1e-12);
}

TEST_CASE("closed form matches the stated example") {
  // beta=1, alpha=1, pi_spin=0.5, gamma=1, lambda=0.2, s=1, even branch:
  // 0 + (1 - e^{-2} * 0.5) + 0.4
  SpinCatWitnessSpec spec{1.0, 1.0, 0.2, +1, 1.0};
  double got = spin_cat_expectation_closed_form(1.0, 0.5, spec);
  double want = 1.0 - std::exp(-2.0) * 0.5 + 0.4;
  CHECK(got == doctest::Approx(want).epsilon(1e-14));
  CHECK(got == doctest::Approx(1.332332).epsilon(1e-6));

  // bound attained at beta = alpha = 0 with unit spin parity
  SpinCatWitnessSpec zero{0.0, 1.0, 0.2, +1, 1.0};
  CHECK(spin_cat_expectation_closed_form(0.0, 1.0, zero) ==
        doctest::Approx(0.4).epsilon(1e-14));

  // large-alpha matched coherent state: lambda s(s+1) + gamma(1 - e^{-18})
  SpinCatWitnessSpec big{3.0, 1.0, 0.2, +1, 1.0};
  double v = spin_cat_expectation_closed_form(3.0, 1.0, big);
  CHECK(v == doctest::Approx(0.4 + 1.0 - std::exp(-18.0)).epsilon(1e-12));

  CHECK_THROWS_AS(spin_cat_expectation_closed_form(1.0, 1.5, spec),
                  std::invalid_argument);
}

TEST_CASE("numeric expectation agrees with the closed form") {
  FockSpace space(48, 4);
  SpinSpace one = make_spin_space(1.0);
  SpinCatWitnessSpec spec{0.8, 1.0, 0.5, +1, 1.0};

  CVector chi_top = CVector::Zero(3);
  chi_top(0) = 1.0;  // |1,1>, spin parity +1
  double closed = spin_cat_expectation_closed_form(1.2, 1.0, spec);
  double numeric = spin_cat_expectation_numeric(space, one, spec, 1.2, chi_top);
  CHECK(std::abs(closed - numeric) <= 1e-9);

  // oscillator sector alone: |beta^2 - alpha^2|^2 via gamma, lambda -> 0+
  SpinCatWitnessSpec bare{0.8, 1e-14, 1e-14, +1, 1.0};
  double osc = spin_cat_expectation_numeric(space, one, bare, 1.2, chi_top);
  CHECK(osc == doctest::Approx(std::norm(Complex(1.44) - Complex(0.64))).epsilon(1e-9));

  // product grid across beta, alpha, s
  for (double s : {0.5, 1.0, 1.5}) {
    SpinSpace spin = make_spin_space(s);
    for (double beta : {0.0, 0.7, 1.3})
      for (double alpha : {0.5, 1.0}) {
        SpinCatWitnessSpec sp{alpha, 0.9, 0.3, -1, s};
        CVector chi = CVector::Zero(spin.dim);
        chi(0) = Complex(0.8, 0.0);
        if (spin.dim > 1) chi(1) = Complex(0.0, 0.6);
        CVector chi_n = chi.normalized();
        double pi_spin = (chi_n.adjoint() * spin.parity * chi_n)(0).real();
        double cf = spin_cat_expectation_closed_form(beta, pi_spin, sp);
        double num = spin_cat_expectation_numeric(space, spin, sp, beta, chi);
        CHECK(std::abs(cf - num) <= 1e-9);
      }
  }

  CVector wrong_dim = CVector::Zero(4);
  CHECK_THROWS_AS(spin_cat_expectation_numeric(space, one, spec, 1.0, wrong_dim),
                  DimensionMismatch);
}

TEST_CASE("random states respect the casimir lower bound") {
  FockSpace space(32, 4);
  std::mt19937_64 rng(123);
  std::normal_distribution<double> g(0.0, 1.0);
  for (double s : {0.5, 1.0}) {
    SpinSpace spin = make_spin_space(s);
    SpinCatWitnessSpec spec{1.0, 0.8, 0.4, +1, s};
    Matrix o = spin_cat_witness(space, spin, spec);
    double bound = spec.lambda * s * (s + 1.0);
    for (int trial = 0; trial < 2000; ++trial) {
      CVector psi(o.rows());
      for (int i = 0; i < psi.size(); ++i) psi(i) = Complex(g(rng), g(rng));
      psi.normalize();
      CHECK(psi.dot(o * psi).real() >= bound - 1e-8);
    }
  }
}

TEST_CASE("deformation does not commute with the su(1,1) generators") {
  FockSpace space(32, 4);
  CHECK(deformation_su11_commutator_norm(space, 1.0) > 0.01);
  // covariance under the orbit map alpha^2 -> alpha^2 e^{2i phi} holds instead
  // (exercised via the witness phase-covariance tests)
}
