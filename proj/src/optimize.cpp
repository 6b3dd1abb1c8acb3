#include "catkit/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "catkit/errors.hpp"

namespace catkit {

SimplexResult nelder_mead(const Objective& f, const Eigen::VectorXd& x0,
                          const SimplexOptions& opts) {
  const int n = static_cast<int>(x0.size());
  const double reflect = 1.0, expand = 2.0, contract = 0.5, shrink = 0.5;

  std::vector<Eigen::VectorXd> pts(n + 1, x0);
  for (int i = 0; i < n; ++i) {
    double step = opts.init_step.size() == n ? opts.init_step(i) : 0.5;
    pts[i + 1](i) += step;
  }
  std::vector<double> vals(n + 1);
  for (int i = 0; i <= n; ++i) vals[i] = f(pts[i]);

  std::vector<int> order(n + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return vals[a] < vals[b]; });
  };

  SimplexResult res;
  int iter = 0;
  for (; iter < opts.max_iter; ++iter) {
    sort_simplex();
    int best = order[0], worst = order[n], second_worst = order[n - 1];
    if (std::isfinite(vals[best]) &&
        std::abs(vals[worst] - vals[best]) <= opts.f_tol) {
      res.converged = true;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i <= n; ++i)
      if (i != worst) centroid += pts[i];
    centroid /= n;

    Eigen::VectorXd xr = centroid + reflect * (centroid - pts[worst]);
    double fr = f(xr);
    if (fr < vals[best]) {
      Eigen::VectorXd xe = centroid + expand * (centroid - pts[worst]);
      double fe = f(xe);
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
    } else if (fr < vals[second_worst]) {
      pts[worst] = xr;
      vals[worst] = fr;
    } else {
      bool outside = fr < vals[worst];
      Eigen::VectorXd xc =
          outside ? Eigen::VectorXd(centroid + contract * (xr - centroid))
                  : Eigen::VectorXd(centroid - contract * (centroid - pts[worst]));
      double fc = f(xc);
      if (fc < std::min(fr, vals[worst])) {
        pts[worst] = xc;
        vals[worst] = fc;
      } else {
        for (int i = 0; i <= n; ++i) {
          if (i == best) continue;
          pts[i] = pts[best] + shrink * (pts[i] - pts[best]);
          vals[i] = f(pts[i]);
        }
      }
    }
  }

  sort_simplex();
  res.x = pts[order[0]];
  res.value = vals[order[0]];
  res.iterations = iter;
  return res;
}

SimplexResult multistart_minimize(const Objective& f,
                                  const std::vector<Eigen::VectorXd>& starts,
                                  const SimplexOptions& opts) {
  SimplexResult best;
  best.value = std::numeric_limits<double>::infinity();
  bool any = false;
  for (const auto& s : starts) {
    SimplexResult r = nelder_mead(f, s, opts);
    if (std::isfinite(r.value) && r.value < best.value) {
      best = r;
      any = true;
    }
  }
  if (!any) throw OptimizationFailure("multistart_minimize: every start diverged");
  return best;
}

double golden_section_minimize(const std::function<double(double)>& f, double lo,
                               double hi, double x_tol, double* arg_out) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > x_tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  double xm = 0.5 * (a + b);
  if (arg_out) *arg_out = xm;
  return f(xm);
}

}  // namespace catkit
