// Python bindings for the core operations.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "catkit/catability.hpp"
#include "catkit/channels.hpp"
#include "catkit/dirac.hpp"
#include "catkit/fw.hpp"
#include "catkit/spin_s.hpp"
#include "catkit/su11.hpp"
#include "catkit/verify.hpp"

namespace py = pybind11;
using namespace catkit;

PYBIND11_MODULE(_catkit, m) {
  m.doc() = "Truncated-Fock-space cat-state witnesses, catability, and "
            "relativistic diagnostics";

  py::register_exception<TruncationError>(m, "TruncationError");
  py::register_exception<DegenerateCatError>(m, "DegenerateCatError");
  py::register_exception<DimensionMismatch>(m, "DimensionMismatchError");
  py::register_exception<KrausIncomplete>(m, "KrausIncompleteError");
  py::register_exception<QuadratureUnderresolved>(m, "QuadratureUnderresolvedError");
  py::register_exception<OptimizationFailure>(m, "OptimizationFailureError");
  py::register_exception<DegenerateDenominator>(m, "DegenerateDenominatorError");
  py::register_exception<DivergentRegime>(m, "DivergentRegimeError");
  py::register_exception<NoRevivalFound>(m, "NoRevivalFoundError");
  py::register_exception<AliasedSampling>(m, "AliasedSamplingError");
  py::register_exception<InvalidSpin>(m, "InvalidSpinError");

  py::class_<FockSpace>(m, "FockSpace")
      .def(py::init<int, int>(), py::arg("n_cut"), py::arg("guard_band") = 4)
      .def_readonly("n_cut", &FockSpace::n_cut)
      .def_readonly("guard_band", &FockSpace::guard_band)
      .def_property_readonly("guarded_dim", &FockSpace::guarded_dim);

  py::class_<QuantumState>(m, "QuantumState")
      .def_static("from_vector", &QuantumState::from_vector)
      .def_static("from_density", &QuantumState::from_density)
      .def_property_readonly("is_vector", &QuantumState::is_vector)
      .def_property_readonly("dim", &QuantumState::dim)
      .def("vector", &QuantumState::vec)
      .def("density", &QuantumState::density);

  py::class_<LadderOperators>(m, "LadderOperators")
      .def_readonly("lowering", &LadderOperators::lowering)
      .def_readonly("raising", &LadderOperators::raising)
      .def_readonly("number", &LadderOperators::number);

  m.def("make_ladder", &make_ladder);
  m.def("coherent_state", &coherent_state, py::arg("space"), py::arg("beta"));

  py::class_<CatSpec>(m, "CatSpec")
      .def(py::init([](Complex alpha, int parity, double theta) {
             return CatSpec{alpha, parity, theta};
           }),
           py::arg("alpha"), py::arg("parity") = 1, py::arg("theta") = 0.0)
      .def_readwrite("alpha", &CatSpec::alpha)
      .def_readwrite("parity", &CatSpec::parity)
      .def_readwrite("theta", &CatSpec::theta);

  m.def("cat_state", &cat_state);
  m.def("parity_operator", &parity_operator);
  m.def("phase_rotation", &phase_rotation);
  m.def("matrix_exponential", &matrix_exponential, py::arg("op"),
        py::arg("scale") = Complex(1.0, 0.0));
  m.def("expectation", &expectation);
  m.def("expectation_real", &expectation_real);
  m.def("wigner_origin", &wigner_origin);
  m.def("fidelity", &fidelity);

  py::class_<Su11Generators>(m, "Su11Generators")
      .def_readonly("k_plus", &Su11Generators::k_plus)
      .def_readonly("k_minus", &Su11Generators::k_minus)
      .def_readonly("k_zero", &Su11Generators::k_zero);

  m.def("make_su11", &make_su11);
  m.def("casimir_quadratic", &casimir_quadratic);
  m.def("casimir_reduction_residual", &casimir_reduction_residual);
  m.def("squeeze_operator", &squeeze_operator);
  m.def("quadrature", [](const FockSpace& space, double phi) {
    QuadraturePair q = quadrature(space, phi);
    return py::make_tuple(q.x, q.p);
  });

  py::class_<WitnessSpec>(m, "WitnessSpec")
      .def(py::init([](Complex alpha, double gamma, int branch, double phi) {
             return WitnessSpec{alpha, gamma, branch, phi};
           }),
           py::arg("alpha"), py::arg("gamma") = 1.0, py::arg("branch") = 1,
           py::arg("phi") = 0.0)
      .def_readwrite("alpha", &WitnessSpec::alpha)
      .def_readwrite("gamma", &WitnessSpec::gamma)
      .def_readwrite("branch", &WitnessSpec::branch)
      .def_readwrite("phi", &WitnessSpec::phi);

  m.def("witness_operator", &witness_operator);
  m.def("witness_expectation_fock", &witness_expectation_fock);
  m.def("phase_covariance_residual", &phase_covariance_residual);

  py::class_<GaussianParams>(m, "GaussianParams")
      .def(py::init([](Complex beta, double r, double phi_sq) {
             return GaussianParams{beta, r, phi_sq};
           }),
           py::arg("beta") = Complex(0.0, 0.0), py::arg("r") = 0.0,
           py::arg("phi_sq") = 0.0)
      .def_readwrite("beta", &GaussianParams::beta)
      .def_readwrite("r", &GaussianParams::r)
      .def_readwrite("phi_sq", &GaussianParams::phi_sq);

  m.def("gaussian_state", &gaussian_state);

  py::class_<OptimizerConfig>(m, "OptimizerConfig")
      .def(py::init<>())
      .def_readwrite("multistarts", &OptimizerConfig::multistarts)
      .def_readwrite("max_iter", &OptimizerConfig::max_iter)
      .def_readwrite("f_tol", &OptimizerConfig::f_tol)
      .def_readwrite("r_max", &OptimizerConfig::r_max)
      .def_readwrite("beta_margin", &OptimizerConfig::beta_margin)
      .def_readwrite("gamma_grid", &OptimizerConfig::gamma_grid)
      .def_readwrite("gamma_lo", &OptimizerConfig::gamma_lo)
      .def_readwrite("gamma_hi", &OptimizerConfig::gamma_hi);

  py::class_<GaussianMinimum>(m, "GaussianMinimum")
      .def_readonly("value", &GaussianMinimum::value)
      .def_readonly("argmin", &GaussianMinimum::argmin);

  m.def("gaussian_minimum", &gaussian_minimum, py::arg("space"), py::arg("spec"),
        py::arg("config") = OptimizerConfig{});

  py::class_<XiResult>(m, "XiResult")
      .def_readonly("xi", &XiResult::xi)
      .def_readonly("gamma_star", &XiResult::gamma_star)
      .def_readonly("gaussian_star", &XiResult::gaussian_star)
      .def_readonly("numerator", &XiResult::numerator)
      .def_readonly("denominator", &XiResult::denominator);

  m.def("xi_measure", &xi_measure, py::arg("space"), py::arg("state"), py::arg("alpha"),
        py::arg("branch"), py::arg("config") = OptimizerConfig{});

  py::class_<LossChannel>(m, "LossChannel")
      .def(py::init<double, int>(), py::arg("eta"), py::arg("kraus_cut") = 0)
      .def_readonly("eta", &LossChannel::eta)
      .def_readonly("kraus_cut", &LossChannel::kraus_cut);

  m.def("loss_kraus_operators", &loss_kraus_operators);
  m.def("kraus_completeness_residual", &kraus_completeness_residual);
  m.def("apply_loss", &apply_loss);

  py::class_<PhaseDiffusion>(m, "PhaseDiffusion")
      .def(py::init<double, double, int>(), py::arg("sigma"), py::arg("theta0") = 0.0,
           py::arg("quad_points") = 256)
      .def_readonly("sigma", &PhaseDiffusion::sigma)
      .def_readonly("theta0", &PhaseDiffusion::theta0)
      .def_readonly("quad_points", &PhaseDiffusion::quad_points);

  m.def("apply_phase_diffusion", &apply_phase_diffusion);

  py::class_<SweepResult>(m, "SweepResult")
      .def_property_readonly("columns", &SweepResult::columns)
      .def_property_readonly("rows", &SweepResult::rows)
      .def("to_csv", &SweepResult::to_csv)
      .def("body_csv", &SweepResult::body_csv)
      .def("to_json", &SweepResult::to_json);

  m.def("robustness_scan", &robustness_scan, py::arg("space"), py::arg("alpha"),
        py::arg("eta_grid"), py::arg("config") = OptimizerConfig{});

  py::class_<GradedHamiltonian>(m, "GradedHamiltonian")
      .def(py::init<Matrix, double, Matrix, Matrix>(), py::arg("beta"), py::arg("mass"),
           py::arg("even_part"), py::arg("odd_part"))
      .def_property_readonly("beta", &GradedHamiltonian::beta)
      .def_property_readonly("mass", &GradedHamiltonian::mass)
      .def_property_readonly("even_part", &GradedHamiltonian::even_part)
      .def_property_readonly("odd_part", &GradedHamiltonian::odd_part)
      .def("total", &GradedHamiltonian::total);

  m.def("grade_split", &grade_split);
  m.def("fw_generator_first", &fw_generator_first);
  m.def("fw_generator_second", &fw_generator_second);

  py::class_<FwIterationRecord>(m, "FwIterationRecord")
      .def_readonly("iteration", &FwIterationRecord::iteration)
      .def_readonly("generator", &FwIterationRecord::generator)
      .def_readonly("odd_before", &FwIterationRecord::odd_before)
      .def_readonly("odd_after", &FwIterationRecord::odd_after);

  py::class_<FwResult>(m, "FwResult")
      .def_readonly("unitary", &FwResult::unitary)
      .def_readonly("transformed", &FwResult::transformed)
      .def_readonly("log", &FwResult::log)
      .def_readonly("converged", &FwResult::converged);

  m.def("fw_iterate", &fw_iterate, py::arg("hamiltonian"), py::arg("max_iter") = 12,
        py::arg("tol") = 1e-10);
  m.def("fw_kinetic_series", &fw_kinetic_series, py::arg("p"), py::arg("m"),
        py::arg("order") = 10);
  m.def("free_dirac_hamiltonian", &free_dirac_hamiltonian);
  m.def("lattice_dirac_hamiltonian", &lattice_dirac_hamiltonian);
  m.def("dirac_beta", &dirac_beta);
  m.def("dirac_alpha_x", &dirac_alpha_x);
  m.def("dirac_gamma", &dirac_gamma);

  py::class_<DiracCatSpec>(m, "DiracCatSpec")
      .def(py::init([](Complex alpha, int branch, double gamma, double mass,
                       double momentum, double omega) {
             return DiracCatSpec{alpha, branch, gamma, mass, momentum, omega};
           }),
           py::arg("alpha"), py::arg("branch") = 1, py::arg("gamma") = 1.0,
           py::arg("mass") = 1.0, py::arg("momentum") = 0.0, py::arg("omega") = 1.0)
      .def_readwrite("alpha", &DiracCatSpec::alpha)
      .def_readwrite("branch", &DiracCatSpec::branch)
      .def_readwrite("gamma", &DiracCatSpec::gamma)
      .def_readwrite("mass", &DiracCatSpec::mass)
      .def_readwrite("momentum", &DiracCatSpec::momentum)
      .def_readwrite("omega", &DiracCatSpec::omega)
      .def_property_readonly("energy", &DiracCatSpec::energy);

  py::class_<ParityFactors>(m, "ParityFactors")
      .def_readonly("spinorial", &ParityFactors::spinorial)
      .def_readonly("orbital", &ParityFactors::orbital)
      .def_readonly("product", &ParityFactors::product);

  m.def("positive_energy_spinor", &positive_energy_spinor, py::arg("p"), py::arg("m"),
        py::arg("spin") = 1);
  m.def("dirac_parity_expectations", &dirac_parity_expectations);
  m.def("relativistic_catability_closed_form", &relativistic_catability_closed_form);
  m.def("relativistic_catability_numeric", &relativistic_catability_numeric);
  m.def("m_over_e_series", &m_over_e_series);
  m.def("revival_time", &revival_time);
  m.def("revival_detect", &revival_detect, py::arg("m"), py::arg("omega"),
        py::arg("alpha"), py::arg("n_cut") = 64);
  m.def("autocorrelation", &autocorrelation);
  m.def("zitterbewegung_signal", &zitterbewegung_signal);
  m.def("zitterbewegung_frequency", &zitterbewegung_frequency);
  m.def("relativistic_uncertainty_product", &relativistic_uncertainty_product);

  py::class_<SpinSpace>(m, "SpinSpace")
      .def_readonly("s", &SpinSpace::s)
      .def_readonly("dim", &SpinSpace::dim)
      .def_readonly("sx", &SpinSpace::sx)
      .def_readonly("sy", &SpinSpace::sy)
      .def_readonly("sz", &SpinSpace::sz)
      .def_readonly("s_squared", &SpinSpace::s_squared)
      .def_readonly("parity", &SpinSpace::parity);

  m.def("make_spin_space", &make_spin_space);

  py::class_<SpinCatWitnessSpec>(m, "SpinCatWitnessSpec")
      .def(py::init([](Complex alpha, double gamma, double lambda, int branch, double s) {
             return SpinCatWitnessSpec{alpha, gamma, lambda, branch, s};
           }),
           py::arg("alpha"), py::arg("gamma") = 1.0, py::arg("lambda_") = 1.0,
           py::arg("branch") = 1, py::arg("s") = 0.5)
      .def_readwrite("alpha", &SpinCatWitnessSpec::alpha)
      .def_readwrite("gamma", &SpinCatWitnessSpec::gamma)
      .def_readwrite("lambda_", &SpinCatWitnessSpec::lambda)
      .def_readwrite("branch", &SpinCatWitnessSpec::branch)
      .def_readwrite("s", &SpinCatWitnessSpec::s);

  m.def("spin_cat_witness", &spin_cat_witness);
  m.def("spin_cat_expectation_closed_form", &spin_cat_expectation_closed_form);
  m.def("spin_cat_expectation_numeric", &spin_cat_expectation_numeric);
  m.def("spin_cat_expectation_state", &spin_cat_expectation_state);
  m.def("deformation_su11_commutator_norm", &deformation_su11_commutator_norm);

  py::class_<VerifyCheck>(m, "VerifyCheck")
      .def_readonly("suite", &VerifyCheck::suite)
      .def_readonly("name", &VerifyCheck::name)
      .def_readonly("measured", &VerifyCheck::measured)
      .def_readonly("threshold", &VerifyCheck::threshold)
      .def_readonly("passed", &VerifyCheck::pass)
      .def_readonly("warn_only", &VerifyCheck::warn_only);

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("checks", &VerifyReport::checks)
      .def("all_hard_passed", &VerifyReport::all_hard_passed)
      .def("hard_failures", &VerifyReport::hard_failures)
      .def("warnings", &VerifyReport::warnings)
      .def("to_csv", &VerifyReport::to_csv);

  py::class_<VerifyOptions>(m, "VerifyOptions")
      .def(py::init<>())
      .def_readwrite("n_cut", &VerifyOptions::n_cut)
      .def_readwrite("guard_band", &VerifyOptions::guard_band)
      .def_readwrite("seed", &VerifyOptions::seed)
      .def_readwrite("exploratory", &VerifyOptions::exploratory)
      .def_readwrite("suite_filter", &VerifyOptions::suite_filter);

  m.def("run_verification", &run_verification, py::arg("options") = VerifyOptions{});
}
