#include <doctest.h>

#include <random>

#include "catkit/catability.hpp"
#include "catkit/su11.hpp"

using namespace catkit;

TEST_CASE("witness operator basics") {
  FockSpace space(32, 4);

  WitnessSpec at_zero{0.0, 1.0, +1, 0.0};
  Matrix o = witness_operator(space, at_zero);
  CHECK(std::abs(o(0, 0)) < 1e-14);  // vacuum is the alpha->0 even cat

  // matched even cat lies in the kernel
  WitnessSpec spec{1.0, 1.0, +1, 0.0};
  QuantumState cat = cat_state(space, CatSpec{1.0, +1, 0.0});
  CHECK(std::abs(expectation_real(cat, witness_operator(space, spec))) <= 1e-8);

  // frame mismatch pi/4 leaves the quadratic part 4|alpha|^4 sin^2(pi/4) = 2
  WitnessSpec tilted{1.0, 1.0, +1, M_PI / 4.0};
  double got = expectation_real(cat, witness_operator(space, tilted));
  CHECK(got == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("witness equals its normal-ordered expansion") {
  FockSpace space(32, 4);
  LadderOperators ops = make_ladder(space);
  for (double phi : {0.0, 0.9}) {
    WitnessSpec spec{Complex(1.1, -0.4), 1.7, -1, phi};
    Matrix o = witness_operator(space, spec);

    Complex a2 = spec.alpha * spec.alpha * std::exp(2.0 * kI * phi);
    Matrix expanded = ops.number * (ops.number - Matrix::Identity(32, 32)) -
                      a2 * ops.raising * ops.raising -
                      std::conj(a2) * ops.lowering * ops.lowering +
                      std::pow(std::abs(spec.alpha), 4) * Matrix::Identity(32, 32) +
                      spec.gamma * (Matrix::Identity(32, 32) + parity_operator(space));
    CHECK(max_norm(o - expanded) <= 1e-12);
  }
}

TEST_CASE("witness equals its su(1,1) factored form") {
  // 4 (K+ - conj(alpha)^2 e^{-2i phi}/2)(K- - alpha^2 e^{2i phi}/2) + gamma(1 -+ Pi)
  FockSpace space(32, 4);
  Su11Generators gen = make_su11(space);
  WitnessSpec spec{Complex(0.9, 0.2), 1.3, +1, 0.6};
  Complex a2 = spec.alpha * spec.alpha * std::exp(2.0 * kI * spec.phi);
  Matrix id = Matrix::Identity(32, 32);
  Matrix factored =
      4.0 * (gen.k_plus - 0.5 * std::conj(a2) * id) * (gen.k_minus - 0.5 * a2 * id) +
      spec.gamma * (id - parity_operator(space));
  CHECK(max_norm(witness_operator(space, spec) - factored) <= 1e-12);
}

TEST_CASE("witness is positive semidefinite") {
  FockSpace space(48, 4);
  for (double alpha : {0.0, 0.8, 1.5, 2.5})
    for (double gamma : {0.2, 1.0, 5.0})
      for (int branch : {+1, -1}) {
        Matrix o = witness_operator(space, WitnessSpec{alpha, gamma, branch, 0.3});
        Eigen::SelfAdjointEigenSolver<Matrix> es(o, Eigen::EigenvaluesOnly);
        CHECK(es.eigenvalues().minCoeff() >= -1e-10);
      }
}

TEST_CASE("fock-sum evaluation") {
  // vacuum, alpha=1, gamma=1, even branch: 0 + 0 + |alpha|^4 + gamma(1-1) = 1
  Matrix vac_rho = Matrix::Zero(32, 32);
  vac_rho(0, 0) = 1.0;
  QuantumState vac = QuantumState::from_density(vac_rho);
  CHECK(witness_expectation_fock(vac, WitnessSpec{1.0, 1.0, +1, 0.0}) ==
        doctest::Approx(1.0).epsilon(1e-14));

  FockSpace space(48, 4);
  QuantumState cat = cat_state(space, CatSpec{1.0, +1, 0.0});
  QuantumState cat_rho = QuantumState::from_density(cat.density());
  CHECK(std::abs(witness_expectation_fock(cat_rho, WitnessSpec{1.0, 1.0, +1, 0.0})) <=
        1e-8);

  // mixed state of two coherent branches vs the matrix-trace oracle
  QuantumState plus = coherent_state(space, 1.0);
  QuantumState minus = coherent_state(space, -1.0);
  Matrix mixed = 0.5 * (plus.density() + minus.density());
  QuantumState mixed_state = QuantumState::from_density(mixed);
  WitnessSpec spec{1.0, 1.0, +1, 0.0};
  double fock_sum = witness_expectation_fock(mixed_state, spec);
  double trace = expectation_real(mixed_state, witness_operator(space, spec));
  CHECK(fock_sum == doctest::Approx(trace).epsilon(1e-10));
}

TEST_CASE("fock-sum matches trace on random densities") {
  FockSpace space(32, 4);
  std::mt19937_64 rng(42);
  std::normal_distribution<double> g(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    Matrix m(32, 32);
    for (int i = 0; i < 32; ++i)
      for (int j = 0; j < 32; ++j) m(i, j) = Complex(g(rng), g(rng));
    Matrix rho = m * m.adjoint();
    rho /= rho.trace().real();
    QuantumState st = QuantumState::from_density(rho);
    WitnessSpec spec{Complex(0.8, 0.5), 1.3, trial % 2 ? +1 : -1, 0.4};
    double diff = std::abs(witness_expectation_fock(st, spec) -
                           expectation_real(st, witness_operator(space, spec)));
    worst = std::max(worst, diff);
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("pure-state evaluator agrees with the density path") {
  FockSpace space(48, 4);
  for (double alpha : {0.6, 1.4}) {
    CVector cat = cat_state(space, CatSpec{alpha, +1, 0.7}).vec();
    WitnessSpec spec{alpha, 0.9, +1, 0.2};
    double pure = witness_expectation_pure(cat, spec);
    double dens = witness_expectation_fock(
        QuantumState::from_density(cat * cat.adjoint()), spec);
    CHECK(pure == doctest::Approx(dens).epsilon(1e-12));
  }
}

TEST_CASE("phase covariance orbit") {
  FockSpace space(32, 4);
  WitnessSpec spec{1.2, 1.0, +1, 0.3};

  CHECK(phase_covariance_residual(space, spec, 0.0) == 0.0);
  CHECK(phase_covariance_residual(space, spec, 0.7) <= 1e-12);

  // period pi in phi: O_{phi+pi} is the same operator
  WitnessSpec shifted = spec;
  shifted.phi = spec.phi + M_PI;
  CHECK(max_norm(witness_operator(space, spec) - witness_operator(space, shifted)) <=
        1e-12);
  CHECK(phase_covariance_residual(space, spec, M_PI) <= 1e-12);
}

TEST_CASE("matched-phase law over the full grid") {
  FockSpace space(64, 4);
  for (double alpha : {0.8, 1.5, 2.5}) {
    for (int branch : {+1, -1}) {
      for (int k = 0; k < 32; ++k) {
        double theta = 2.0 * M_PI * k / 32.0;
        QuantumState cat = cat_state(space, CatSpec{alpha, branch, theta});
        double got = expectation_real(
            cat, witness_operator(space, WitnessSpec{alpha, 1.0, branch, 0.0}));
        double want = 4.0 * std::pow(alpha, 4) * std::pow(std::sin(theta), 2);
        if (want < 1e-9) {
          CHECK(std::abs(got - want) <= 1e-9);
        } else {
          CHECK(std::abs(got - want) / want <= 1e-7);
        }
      }
    }
  }
}

TEST_CASE("cats are pair-coherent, coherent states are field-coherent") {
  FockSpace space(48, 4);
  LadderOperators ops = make_ladder(space);
  Matrix a2 = ops.lowering * ops.lowering;

  // coherent state: zero field variance, nonzero pair variance offset
  CVector coh = coherent_state(space, 1.2).vec();
  Complex mean_a = coh.dot(ops.lowering * coh);
  Complex mean_a2 = coh.dot(a2 * coh);
  CHECK(std::abs(mean_a2 - mean_a * mean_a) <= 1e-10);

  // cat state: <a> = 0 but the pair operator is sharp, <a^4> = <a^2>^2
  CVector cat = cat_state(space, CatSpec{1.2, +1, 0.0}).vec();
  CHECK(std::abs(cat.dot(ops.lowering * cat)) <= 1e-10);
  Complex pair_mean = cat.dot(a2 * cat);
  Complex pair_sq = cat.dot(a2 * (a2 * cat));
  CHECK(std::abs(pair_sq - pair_mean * pair_mean) <= 1e-8);
  CHECK(std::abs(pair_mean - Complex(1.44)) <= 1e-8);
}

TEST_CASE("parity mismatch adds exactly 2 gamma") {
  FockSpace space(48, 4);
  for (double alpha : {0.8, 1.5})
    for (double gamma : {0.5, 1.0, 2.0}) {
      QuantumState cat = cat_state(space, CatSpec{alpha, +1, 0.4});
      double matched = expectation_real(
          cat, witness_operator(space, WitnessSpec{alpha, gamma, +1, 0.0}));
      double wrong = expectation_real(
          cat, witness_operator(space, WitnessSpec{alpha, gamma, -1, 0.0}));
      CHECK(wrong - matched == doctest::Approx(2.0 * gamma).epsilon(1e-8));
    }
}

TEST_CASE("gaussian states") {
  FockSpace space(48, 4);

  QuantumState vac = gaussian_state(space, GaussianParams{0.0, 0.0, 0.0});
  CHECK(std::abs(vac.vec()(0) - Complex(1.0, 0.0)) < 1e-12);

  QuantumState disp = gaussian_state(space, GaussianParams{1.3, 0.0, 0.0});
  QuantumState coh = coherent_state(space, 1.3);
  CHECK((disp.vec() - coh.vec()).cwiseAbs().maxCoeff() <= 1e-10);

  // with S(zeta)=exp(zeta K+ - zeta* K-), phi_sq = pi squeezes X0 and
  // phi_sq = 0 squeezes P0 (matrix-derived; see the squeeze tests)
  LadderOperators ops = make_ladder(space);
  Matrix x0 = (ops.lowering + ops.raising) / std::sqrt(2.0);
  Matrix p0 = (ops.lowering - ops.raising) / (kI * std::sqrt(2.0));
  auto variance = [&](const QuantumState& st, const Matrix& op) {
    double m1 = expectation_real(st, op);
    double m2 = expectation_real(st, op * op);
    return m2 - m1 * m1;
  };
  QuantumState sq_x = gaussian_state(space, GaussianParams{0.0, 0.5, M_PI});
  CHECK(variance(sq_x, x0) == doctest::Approx(std::exp(-1.0) / 2.0).epsilon(1e-6));
  QuantumState sq_p = gaussian_state(space, GaussianParams{0.0, 0.5, 0.0});
  CHECK(variance(sq_p, p0) == doctest::Approx(std::exp(-1.0) / 2.0).epsilon(1e-6));

  CHECK_THROWS_AS(gaussian_state(space, GaussianParams{5.0, 0.0, 0.0}), TruncationError);
}

TEST_CASE("amplitude recurrence matches the exponential route") {
  // The squeezed tail decays like tanh(r)^{n/2}, so the space grows with r.
  struct Case {
    GaussianParams g;
    int n_cut;
  };
  for (Case c : {Case{{0.0, 0.0, 0.0}, 64},
                 Case{{Complex(1.2, -0.7), 0.0, 0.0}, 64},
                 Case{{Complex(0.5, 0.3), 0.8, 1.1}, 192},
                 Case{{Complex(-1.0, 0.4), 1.2, 4.0}, 320}}) {
    FockSpace space(c.n_cut, 4);
    double captured = 0.0;
    CVector fast = gaussian_state_amplitudes(space, c.g, &captured);
    CVector exact = gaussian_state(space, c.g).vec();
    int imax = 0;
    exact.cwiseAbs().maxCoeff(&imax);
    Complex phase = exact(imax) / fast(imax);
    CHECK(std::abs(std::abs(phase) - 1.0) <= 1e-10);
    CHECK((fast * phase - exact).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK(captured == doctest::Approx(1.0).epsilon(1e-10));
  }

  // truncation mass guard reports lost norm for inadequate spaces
  FockSpace tiny(16, 2);
  double captured = 1.0;
  gaussian_state_amplitudes(tiny, GaussianParams{3.0, 1.5, 0.0}, &captured);
  CHECK(captured < 0.999999);
}

TEST_CASE("gaussian minimum") {
  FockSpace space(32, 4);

  // alpha = 0, even branch: the vacuum wins with value 0
  GaussianMinimum gm = gaussian_minimum(space, WitnessSpec{0.0, 1.0, +1, 0.0});
  CHECK(gm.value <= 1e-10);
  CHECK(std::abs(gm.argmin.beta) <= 1e-4);

  // monotone in gamma: the parity gap is PSD
  FockSpace bigger(48, 4);
  double v1 = gaussian_minimum(bigger, WitnessSpec{1.2, 1.0, +1, 0.0}).value;
  double v2 = gaussian_minimum(bigger, WitnessSpec{1.2, 2.0, +1, 0.0}).value;
  CHECK(v2 >= v1 - 1e-9);
}

TEST_CASE("xi classifies ideal cats and coherent states") {
  FockSpace space(64, 4);
  OptimizerConfig cfg;

  QuantumState ideal = cat_state(space, CatSpec{1.5, +1, 0.0});
  XiResult xi_cat = xi_measure(space, ideal, 1.5, +1, cfg);
  CHECK(xi_cat.xi <= 1e-6);
  CHECK(xi_cat.denominator > 0.0);

  QuantumState coh = coherent_state(space, 1.5);
  XiResult xi_coh = xi_measure(space, coh, 1.5, +1, cfg);
  CHECK(xi_coh.xi >= 0.95);

  CHECK_THROWS_AS(xi_measure(space, coherent_state(space, 0.0), 1e-9, +1, cfg),
                  DegenerateDenominator);
}
