#ifndef CATKIT_OPTIMIZE_HPP
#define CATKIT_OPTIMIZE_HPP

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "catkit/errors.hpp"

namespace catkit {

using Objective = std::function<double(const Eigen::VectorXd&)>;

struct SimplexOptions {
  int max_iter = 400;
  double f_tol = 1e-9;          // absolute spread of simplex values
  Eigen::VectorXd init_step;    // per-dimension initial simplex edge; empty -> 0.5
};

struct SimplexResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Nelder-Mead downhill simplex. Deterministic: no randomness anywhere.
SimplexResult nelder_mead(const Objective& f, const Eigen::VectorXd& x0,
                          const SimplexOptions& opts = {});

/// Runs the simplex from each start and keeps the best finite result.
SimplexResult multistart_minimize(const Objective& f,
                                  const std::vector<Eigen::VectorXd>& starts,
                                  const SimplexOptions& opts = {});

/// Golden-section minimization of a unimodal 1-D function on [lo, hi].
double golden_section_minimize(const std::function<double(double)>& f, double lo,
                               double hi, double x_tol, double* arg_out = nullptr);

}  // namespace catkit

#endif
