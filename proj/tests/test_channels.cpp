#include <doctest.h>

#include "catkit/channels.hpp"

using namespace catkit;

TEST_CASE("loss channel construction and completeness") {
  FockSpace space(32, 4);
  CHECK_THROWS_AS(LossChannel(0.0), std::invalid_argument);
  CHECK_THROWS_AS(LossChannel(1.2), std::invalid_argument);

  for (double eta : {0.3, 0.7, 0.95, 1.0})
    CHECK(kraus_completeness_residual(space, LossChannel(eta)) <= 1e-10);

  // too few Kraus terms on an energetic state: incomplete
  CHECK(kraus_completeness_residual(space, LossChannel(0.5, 3)) > 1e-8);
}

TEST_CASE("eta = 1 is the identity channel") {
  FockSpace space(32, 4);
  QuantumState cat = cat_state(space, CatSpec{1.2, +1, 0.0});
  QuantumState out = apply_loss(space, cat, LossChannel(1.0));
  CHECK(max_norm(out.rho() - cat.density()) <= 1e-12);
}

TEST_CASE("loss maps coherent states to attenuated coherent states") {
  FockSpace space(48, 4);
  double eta = 0.7;
  Complex beta(1.4, 0.5);
  QuantumState out = apply_loss(space, coherent_state(space, beta), LossChannel(eta));
  QuantumState target = coherent_state(space, std::sqrt(eta) * beta);
  CHECK(fidelity(target, out) >= 1.0 - 1e-8);
}

TEST_CASE("loss preserves trace and positivity, shrinks parity") {
  FockSpace space(48, 4);
  QuantumState cat = cat_state(space, CatSpec{1.5, +1, 0.0});
  QuantumState out = apply_loss(space, cat, LossChannel(0.9));

  CHECK(std::abs(out.rho().trace().real() - 1.0) <= 1e-9);
  Eigen::SelfAdjointEigenSolver<Matrix> es(out.rho(), Eigen::EigenvaluesOnly);
  CHECK(es.eigenvalues().minCoeff() >= -1e-9);

  double parity = expectation_real(out, parity_operator(space));
  CHECK(std::abs(parity) < 1.0);
  CHECK(std::abs(parity) > 0.1);  // eta = 0.9 keeps most coherence

  CHECK_THROWS_AS(apply_loss(space, cat, LossChannel(0.5, 2)), KrausIncomplete);
}

TEST_CASE("phase diffusion basics") {
  FockSpace space(48, 4);
  CHECK_THROWS_AS(PhaseDiffusion(0.5, 0.0, 32), std::invalid_argument);
  CHECK_THROWS_AS(PhaseDiffusion(-1.0), std::invalid_argument);

  // sigma -> 0 reproduces the pure cat
  QuantumState narrow = apply_phase_diffusion(space, 1.0, +1,
                                              PhaseDiffusion(1e-6, 0.3, 256));
  QuantumState pure = cat_state(space, CatSpec{1.0, +1, 0.3});
  CHECK(fidelity(pure, narrow) >= 1.0 - 1e-6);
  CHECK(std::abs(narrow.rho().trace().real() - 1.0) <= 1e-9);
}

TEST_CASE("diffused witness follows the wrapped-gaussian law") {
  FockSpace space(48, 4);

  // alpha=1, sigma=0.5, theta0=phi=0: 2(1 - e^{-1/2}) = 0.786939...
  QuantumState rho = apply_phase_diffusion(space, 1.0, +1, PhaseDiffusion(0.5, 0.0, 256));
  double got = witness_expectation_fock(rho, WitnessSpec{1.0, 1.0, +1, 0.0});
  double want = 2.0 * (1.0 - std::exp(-0.5));
  CHECK(want == doctest::Approx(0.786939).epsilon(1e-6));
  CHECK(got == doctest::Approx(want).epsilon(1e-6));

  // full grid of the law
  for (double sigma : {0.1, 0.5, 1.0, 2.0})
    for (double offset : {0.0, M_PI / 6.0, M_PI / 4.0, M_PI / 2.0}) {
      QuantumState r = apply_phase_diffusion(space, 1.0, +1,
                                             PhaseDiffusion(sigma, offset, 256));
      double numeric = witness_expectation_fock(r, WitnessSpec{1.0, 1.0, +1, 0.0});
      double analytic = 2.0 * (1.0 - std::exp(-2.0 * sigma * sigma) *
                                         std::cos(2.0 * offset));
      CHECK(std::abs(numeric - analytic) / analytic <= 1e-6);
    }

  // sigma -> infinity: uniform phase, expectation 2|alpha|^4
  QuantumState wide = apply_phase_diffusion(space, 1.0, +1, PhaseDiffusion(10.0, 0.0, 256));
  double flat = witness_expectation_fock(wide, WitnessSpec{1.0, 1.0, +1, 0.0});
  CHECK(std::abs(flat - 2.0) / 2.0 <= 1e-4);
}

TEST_CASE("diffusion preserves diagonal populations") {
  FockSpace space(48, 4);
  QuantumState pure = cat_state(space, CatSpec{1.0, +1, 0.4});
  QuantumState diffused = apply_phase_diffusion(space, 1.0, +1,
                                                PhaseDiffusion(0.8, 0.4, 256));
  Matrix rho_pure = pure.density();
  for (int n = 0; n < space.n_cut; ++n)
    CHECK(std::abs(diffused.rho()(n, n).real() - rho_pure(n, n).real()) <= 1e-9);
}

TEST_CASE("underresolved quadrature is rejected") {
  FockSpace space(48, 4);
  CHECK_THROWS_AS(apply_phase_diffusion(space, 1.0, +1, PhaseDiffusion(0.05, 0.0, 64)),
                  QuadratureUnderresolved);
}

TEST_CASE("xi grows monotonically with loss") {
  FockSpace space(64, 4);
  OptimizerConfig cfg;
  for (int branch : {+1, -1}) {
    double prev = -1.0;
    for (double eta : {1.0, 0.95, 0.9, 0.85, 0.8}) {
      QuantumState cat = cat_state(space, CatSpec{1.5, branch, 0.0});
      QuantumState rho = apply_loss(space, cat, LossChannel(eta));
      double xi = xi_measure(space, rho, 1.5, branch, cfg).xi;
      CHECK(xi >= prev - 1e-3);  // optimizer noise allowance
      prev = xi;
    }
  }
}

TEST_CASE("lossy-cat xi regression baseline") {
  // Pipeline-derived value, recorded as a regression band rather than ground
  // truth: alpha = 1.5 even cat after eta = 0.8 loss, default optimizer.
  FockSpace space(64, 4);
  QuantumState cat = cat_state(space, CatSpec{1.5, +1, 0.0});
  QuantumState rho = apply_loss(space, cat, LossChannel(0.8));
  double xi = xi_measure(space, rho, 1.5, +1, OptimizerConfig{}).xi;
  CHECK(xi > 0.0);
  CHECK(xi < 1.0);
  CHECK(xi == doctest::Approx(0.6656).epsilon(0.05));
}

TEST_CASE("robustness scan shape and lossless limit") {
  FockSpace space(64, 4);
  SweepResult table = robustness_scan(space, 1.2, {0.9, 1.0});
  CHECK(table.columns() ==
        std::vector<std::string>{"eta", "branch", "xi", "witness_expectation"});
  CHECK(table.rows().size() == 4);
  // rows sorted by eta; the eta=1 rows are the last two and have xi ~ 0
  CHECK(table.rows()[0][0] == doctest::Approx(0.9));
  for (std::size_t i = 2; i < 4; ++i) {
    CHECK(table.rows()[i][0] == doctest::Approx(1.0));
    CHECK(table.rows()[i][2] <= 1e-6);
  }
  // lossy rows have strictly positive xi below 1
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(table.rows()[i][2] > 0.0);
    CHECK(table.rows()[i][2] < 1.0);
  }
}
