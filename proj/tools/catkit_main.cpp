// catkit command-line interface: witness sweeps, catability, channels,
// Foldy-Wouthuysen diagnostics, and the verification suite runner.
//
// Exit codes: 0 success, 1 invariant failure, 2 numeric-domain error,
// 3 usage/config error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "catkit/catability.hpp"
#include "catkit/channels.hpp"
#include "catkit/dirac.hpp"
#include "catkit/fw.hpp"
#include "catkit/spin_s.hpp"
#include "catkit/su11.hpp"
#include "catkit/sweep.hpp"
#include "catkit/verify.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

struct RunConfig {
  int n_cut = 64;
  int guard = 4;
  unsigned seed = 42;
  double tol_algebra = 1e-12;
  double tol_trunc = 1e-8;
  double tol_opt = 1e-9;
  std::string format = "csv";
  std::string out;
};

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config file not readable: " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  if (j.contains("ncut")) cfg.n_cut = j["ncut"].get<int>();
  if (j.contains("guard")) cfg.guard = j["guard"].get<int>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<unsigned>();
  if (j.contains("tol_algebra")) cfg.tol_algebra = j["tol_algebra"].get<double>();
  if (j.contains("tol_trunc")) cfg.tol_trunc = j["tol_trunc"].get<double>();
  if (j.contains("tol_opt")) cfg.tol_opt = j["tol_opt"].get<double>();
  if (j.contains("format")) cfg.format = j["format"].get<std::string>();
  if (j.contains("out")) cfg.out = j["out"].get<std::string>();
}

std::string timestamp_utc() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

void attach_metadata(catkit::SweepResult& table, const RunConfig& cfg) {
  table.add_metadata("version", kVersion);
  table.add_metadata("generated_at", timestamp_utc());
  table.add_metadata("ncut", std::to_string(cfg.n_cut));
  table.add_metadata("guard", std::to_string(cfg.guard));
  table.add_metadata("seed", std::to_string(cfg.seed));
}

void emit(const catkit::SweepResult& table, const RunConfig& cfg) {
  std::string payload = cfg.format == "json" ? table.to_json() : table.to_csv();
  if (cfg.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + cfg.out);
    out << payload;
  }
}

catkit::FockSpace make_space(const RunConfig& cfg) {
  return catkit::FockSpace(cfg.n_cut, cfg.guard);
}

catkit::OptimizerConfig optimizer_config(const RunConfig& cfg) {
  catkit::OptimizerConfig oc;
  oc.f_tol = cfg.tol_opt;
  return oc;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace catkit;

  RunConfig cfg;

  // Config precedence: flags > config file > defaults. The config file is
  // located up front (--config or CATKIT_CONFIG) so flags can override it.
  std::string config_path;
  if (const char* env = std::getenv("CATKIT_CONFIG")) config_path = env;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
  try {
    if (!config_path.empty()) load_config_file(config_path, cfg);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 3;
  }

  CLI::App app{"catkit: truncated-Fock-space cat-state witnesses, catability, "
               "and relativistic diagnostics"};
  app.require_subcommand(1);
  std::string config_dummy;
  app.add_option("--config", config_dummy, "JSON config file");
  app.add_option("--ncut", cfg.n_cut, "Fock truncation dimension");
  app.add_option("--guard", cfg.guard, "guard band excluded from algebraic checks");
  app.add_option("--seed", cfg.seed, "deterministic seed");
  app.add_option("--tol-algebra", cfg.tol_algebra, "tolerance for exact identities");
  app.add_option("--tol-trunc", cfg.tol_trunc, "tolerance for truncation-limited results");
  app.add_option("--tol-opt", cfg.tol_opt, "optimizer objective tolerance");
  app.add_option("--format", cfg.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.out, "output path (default stdout)");

  // cat-expect
  double ce_alpha = 1.0, ce_gamma = 1.0, ce_phi = 0.0;
  int ce_branch = 1, ce_points = 32;
  auto* cat_expect = app.add_subcommand(
      "cat-expect", "matched-phase witness expectation vs theta-phi");
  cat_expect->add_option("--alpha", ce_alpha, "cat amplitude");
  cat_expect->add_option("--gamma", ce_gamma, "parity weight");
  cat_expect->add_option("--phi", ce_phi, "witness frame");
  cat_expect->add_option("--branch", ce_branch)->check(CLI::IsMember({1, -1}));
  cat_expect->add_option("--points", ce_points, "sweep length");

  // xi
  double xi_alpha = 1.5, xi_eta = 1.0, xi_beta = 1.5;
  int xi_branch = 1;
  std::string xi_state = "cat";
  auto* xi_cmd = app.add_subcommand("xi", "catability of a reference state");
  xi_cmd->add_option("--alpha", xi_alpha, "witness amplitude");
  xi_cmd->add_option("--branch", xi_branch)->check(CLI::IsMember({1, -1}));
  xi_cmd->add_option("--state", xi_state, "cat | coherent | lossy-cat")
      ->check(CLI::IsMember({"cat", "coherent", "lossy-cat"}));
  xi_cmd->add_option("--eta", xi_eta, "loss transmissivity for lossy-cat");
  xi_cmd->add_option("--beta", xi_beta, "coherent amplitude for state=coherent");

  // phase-scan
  double ps_alpha = 1.2, ps_gamma = 1.0, ps_phi = 0.0;
  int ps_branch = 1, ps_points = 16;
  auto* phase_scan = app.add_subcommand("phase-scan", "witness covariance residual vs chi");
  phase_scan->add_option("--alpha", ps_alpha);
  phase_scan->add_option("--gamma", ps_gamma);
  phase_scan->add_option("--phi", ps_phi);
  phase_scan->add_option("--branch", ps_branch)->check(CLI::IsMember({1, -1}));
  phase_scan->add_option("--points", ps_points);

  // diffusion
  double df_alpha = 1.0, df_theta0 = 0.0, df_phi = 0.0;
  int df_branch = 1, df_quad = 256;
  std::vector<double> df_sigmas{0.1, 0.5, 1.0, 2.0};
  auto* diffusion = app.add_subcommand("diffusion", "phase-diffused witness expectation");
  diffusion->add_option("--alpha", df_alpha);
  diffusion->add_option("--theta0", df_theta0, "mean phase");
  diffusion->add_option("--phi", df_phi, "witness frame");
  diffusion->add_option("--branch", df_branch)->check(CLI::IsMember({1, -1}));
  diffusion->add_option("--quad-points", df_quad)->check(CLI::Range(64, 65536));
  diffusion->add_option("--sigma", df_sigmas, "angular std-dev values");

  // loss
  double ls_alpha = 1.5;
  std::vector<double> ls_etas{1.0, 0.95, 0.9, 0.8};
  auto* loss = app.add_subcommand("loss", "catability robustness under photon loss");
  loss->add_option("--alpha", ls_alpha);
  loss->add_option("--eta", ls_etas, "transmissivity grid");

  // fw-diag
  double fw_p = 0.2, fw_m = 1.0;
  int fw_iters = 12;
  auto* fw_diag = app.add_subcommand("fw-diag", "iterative block-diagonalization log");
  fw_diag->add_option("--p", fw_p, "momentum");
  fw_diag->add_option("--m", fw_m, "mass");
  fw_diag->add_option("--iters", fw_iters, "max iterations");

  // dirac-cat
  double dc_alpha = 1.2, dc_gamma = 1.0, dc_m = 1.0;
  int dc_branch = 1;
  std::vector<double> dc_ps{0.0, 0.25, 0.5, 1.0, 2.0};
  auto* dirac_cat = app.add_subcommand("dirac-cat",
                                       "relativistic catability: closed form vs numeric");
  dirac_cat->add_option("--alpha", dc_alpha);
  dirac_cat->add_option("--gamma", dc_gamma);
  dirac_cat->add_option("--m", dc_m);
  dirac_cat->add_option("--branch", dc_branch)->check(CLI::IsMember({1, -1}));
  dirac_cat->add_option("--p", dc_ps, "momentum grid");

  // revival
  double rv_m = 50.0, rv_omega = 1.0, rv_alpha = 2.0;
  auto* revival = app.add_subcommand("revival", "autocorrelation revival detection");
  revival->add_option("--m", rv_m);
  revival->add_option("--omega", rv_omega);
  revival->add_option("--alpha", rv_alpha);

  // spin-cat
  double sc_alpha = 1.0, sc_beta = 1.0, sc_gamma = 1.0, sc_lambda = 0.5;
  int sc_branch = 1;
  std::vector<double> sc_spins{0.5, 1.0, 1.5, 2.0};
  auto* spin_cat = app.add_subcommand("spin-cat", "spin-s witness: closed form vs numeric");
  spin_cat->add_option("--alpha", sc_alpha);
  spin_cat->add_option("--beta", sc_beta);
  spin_cat->add_option("--gamma", sc_gamma);
  spin_cat->add_option("--lambda", sc_lambda);
  spin_cat->add_option("--branch", sc_branch)->check(CLI::IsMember({1, -1}));
  spin_cat->add_option("--s", sc_spins, "spin values (2s integer)");

  // verify
  std::string vf_suite;
  bool vf_no_exploratory = false;
  auto* verify = app.add_subcommand("verify", "run every module's invariant suite");
  verify->add_option("--suite", vf_suite, "restrict to one suite");
  verify->add_flag("--no-exploratory", vf_no_exploratory, "skip warning-level checks");

  // global options remain usable after the subcommand name
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (*cat_expect) {
      FockSpace space = make_space(cfg);
      SweepResult table({"theta_minus_phi", "numeric", "analytic", "rel_deviation"});
      for (int k = 0; k < ce_points; ++k) {
        double theta = 2.0 * M_PI * k / ce_points;
        QuantumState cat = cat_state(space, CatSpec{ce_alpha, ce_branch, theta});
        WitnessSpec spec{ce_alpha, ce_gamma, ce_branch, ce_phi};
        double numeric = expectation_real(cat, witness_operator(space, spec));
        double analytic = 4.0 * std::pow(std::abs(ce_alpha), 4) *
                          std::pow(std::sin(theta - ce_phi), 2);
        double rel = std::abs(numeric - analytic) / std::max(analytic, 1e-9);
        table.add_row({theta - ce_phi, numeric, analytic, rel});
      }
      attach_metadata(table, cfg);
      emit(table, cfg);
    } else if (*xi_cmd) {
      FockSpace space = make_space(cfg);
      QuantumState state = [&]() -> QuantumState {
        if (xi_state == "coherent") return coherent_state(space, xi_beta);
        QuantumState cat = cat_state(space, CatSpec{xi_alpha, xi_branch, 0.0});
        if (xi_state == "cat") return cat;
        return apply_loss(space, cat, LossChannel(xi_eta));
      }();
      XiResult res = xi_measure(space, state, xi_alpha, xi_branch, optimizer_config(cfg));
      SweepResult table({"xi", "gamma_star", "numerator", "denominator", "beta_re",
                         "beta_im", "r", "phi_sq"});
      table.add_row({res.xi, res.gamma_star, res.numerator, res.denominator,
                     res.gaussian_star.beta.real(), res.gaussian_star.beta.imag(),
                     res.gaussian_star.r, res.gaussian_star.phi_sq});
      attach_metadata(table, cfg);
      emit(table, cfg);
    } else if (*phase_scan) {
      FockSpace space = make_space(cfg);
      SweepResult table({"chi", "residual"});
      for (int k = 0; k < ps_points; ++k) {
        double chi = 2.0 * M_PI * k / ps_points;
        table.add_row({chi, phase_covariance_residual(
                                space, WitnessSpec{ps_alpha, ps_gamma, ps_branch, ps_phi},
                                chi)});
      }
      attach_metadata(table, cfg);
      emit(table, cfg);
    } else if (*diffusion) {
      FockSpace space = make_space(cfg);
      SweepResult table({"sigma", "theta0", "numeric", "analytic", "rel_deviation"});
      for (double sigma : df_sigmas) {
        QuantumState rho = apply_phase_diffusion(space, df_alpha, df_branch,
                                                 PhaseDiffusion(sigma, df_theta0, df_quad));
        double numeric = witness_expectation_fock(
            rho, WitnessSpec{df_alpha, 1.0, df_branch, df_phi});
        double a4 = std::pow(std::abs(df_alpha), 4);
        double analytic = 2.0 * a4 *
                          (1.0 - std::exp(-2.0 * sigma * sigma) *
                                     std::cos(2.0 * (df_theta0 - df_phi)));
        table.add_row({sigma, df_theta0, numeric, analytic,
                       std::abs(numeric - analytic) / std::max(analytic, 1e-9)});
      }
      attach_metadata(table, cfg);
      emit(table, cfg);
    } else if (*loss) {
      FockSpace space = make_space(cfg);
      SweepResult table = robustness_scan(space, ls_alpha, ls_etas, optimizer_config(cfg));
      attach_metadata(table, cfg);
      emit(table, cfg);
    } else if (*fw_diag) {
      GradedHamiltonian gh = free_dirac_hamiltonian(fw_p, fw_m);
      FwResult res = fw_iterate(gh, fw_iters);
      if (!res.converged) throw TruncationError("fw-diag: iteration did not converge");
      SweepResult table({"iteration", "odd_norm_before", "odd_norm_after"});
      for (const auto& rec : res.log)
        table.add_row({static_cast<double>(rec.iteration), rec.odd_before, rec.odd_after});
      attach_metadata(table, cfg);
      emit(table, cfg);
    } else if (*dirac_cat) {
      FockSpace space = make_space(cfg);
      SweepResult table({"p", "closed_form", "numeric", "rel_deviation"});
      for (double p : dc_ps) {
        DiracCatSpec spec{dc_alpha, dc_branch, dc_gamma, dc_m, p, 1.0};
        double closed = relativistic_catability_closed_form(spec);
        double numeric = relativistic_catability_numeric(space, spec);
        double rel = std::abs(closed - numeric) /
                     std::max({std::abs(closed), std::abs(numeric), dc_gamma});
        table.add_row({p, closed, numeric, rel});
      }
      attach_metadata(table, cfg);
      emit(table, cfg);
    } else if (*revival) {
      double formula = revival_time(rv_m, rv_omega);
      double detected = revival_detect(rv_m, rv_omega, rv_alpha);
      SweepResult table({"m", "omega", "t_rev_formula", "t_detected", "rel_deviation"});
      table.add_row({rv_m, rv_omega, formula, detected,
                     std::abs(detected - formula) / formula});
      attach_metadata(table, cfg);
      emit(table, cfg);
    } else if (*spin_cat) {
      FockSpace space = make_space(cfg);
      SweepResult table({"s", "closed_form", "numeric", "abs_deviation"});
      for (double s : sc_spins) {
        SpinSpace spin = make_spin_space(s);
        SpinCatWitnessSpec spec{sc_alpha, sc_gamma, sc_lambda, sc_branch, s};
        CVector chi = CVector::Zero(spin.dim);
        chi(0) = 1.0;  // |s, s>, spin parity +1
        double closed = spin_cat_expectation_closed_form(sc_beta, 1.0, spec);
        double numeric = spin_cat_expectation_numeric(space, spin, spec, sc_beta, chi);
        table.add_row({s, closed, numeric, std::abs(closed - numeric)});
      }
      attach_metadata(table, cfg);
      emit(table, cfg);
    } else if (*verify) {
      VerifyOptions opt;
      opt.n_cut = cfg.n_cut;
      opt.guard_band = cfg.guard;
      opt.seed = cfg.seed;
      opt.algebra_tol = cfg.tol_algebra;
      opt.trunc_tol = cfg.tol_trunc;
      opt.opt_tol = cfg.tol_opt;
      opt.exploratory = !vf_no_exploratory;
      opt.suite_filter = vf_suite;
      VerifyReport report = run_verification(opt);
      std::string body = report.to_csv();
      std::string payload = "# version: " + std::string(kVersion) +
                            "\n# generated_at: " + timestamp_utc() + "\n" + body;
      if (cfg.out.empty()) {
        std::cout << payload;
      } else {
        std::ofstream out(cfg.out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + cfg.out);
        out << payload;
      }
      for (const auto& c : report.checks)
        if (!c.pass && c.warn_only)
          std::cerr << "warning: " << c.suite << "/" << c.name << " measured "
                    << format_full(c.measured) << " vs " << format_full(c.threshold)
                    << " (exploratory)\n";
      if (!report.all_hard_passed()) {
        for (const auto& c : report.checks)
          if (!c.pass && !c.warn_only)
            std::cerr << "FAIL: " << c.suite << "/" << c.name << " measured "
                      << format_full(c.measured) << " vs " << format_full(c.threshold)
                      << "\n";
        return 1;
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
