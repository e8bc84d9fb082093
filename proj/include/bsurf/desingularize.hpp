#pragma once

#include <Eigen/Dense>
#include <vector>

#include "bsurf/form.hpp"

namespace bsurf {

/// The odd smoothing profile f of the desingularization for order m = 2k:
/// outside [-1, 1] the fixed outer law f(x) = -1/((2k-1) x^(2k-1)) +/- 2,
/// inside an odd polynomial matched to the outer law at x = 1 up to the
/// match order. The scaled family is f_eps(x) = eps^-(2k-1) f(x/eps).
struct DesingProfile {
  int k = 1;
  int match_order = 1;
  Eigen::VectorXd odd_coeffs;  // coefficient of x^(2j+1), j = 0..match_order

  double f(double x) const;
  double fprime(double x) const;
  double f_eps(double x, double eps) const;
  double fprime_eps(double x, double eps) const;
};

/// Solves the matching system for the odd polynomial and verifies f' > 0 on
/// a 1e-3-spaced grid of [-1, 1]; throws std::invalid_argument (suggesting a
/// smaller match order) when positivity fails.
DesingProfile build_profile(int k, int match_order);

/// Default match order: min(2k, 3). Order 4 always violates the positivity
/// requirement on f' (the matched polynomial dips), so 3 is the largest
/// generally usable order.
int default_match_order(int k);

/// The moments I_i = int_{-1}^{1} f'(s) s^i ds for i = 0..2k-1; odd i vanish
/// because f' is even.
std::vector<double> profile_moments(const DesingProfile& pr, double tol = 1e-12);

/// Total volume of the desingularized form by the closed formula:
/// sum_F v_F + sum_gamma sum_{i even} [ (2/(i-2k+1))(1 - eps^(i-2k+1))
///   + eps^(i-2k+1) I_i ] a_{gamma,i}.
double desing_total_volume_closed(const SurfacePresentation& p, const BmFormData& w, double eps,
                                  const DesingProfile& pr);

struct DesingVolumeReport {
  double closed_form = 0;
  double numeric = 0;
  double relative_error = 0;
  double epsilon = 0;
};

/// Integrates the desingularized radial density directly (mandatory panel
/// splits at +/- eps) and reports it against the closed formula.
DesingVolumeReport desing_total_volume_numeric(const SurfacePresentation& p, const BmFormData& w,
                                               double eps, const DesingProfile& pr,
                                               double tol = 1e-10);

/// Sup norms over |x| <= 1/2 of finite-difference derivatives (orders
/// 0..2k-1) of the dual-density error Pi_eps - Pi, Pi(x) = x^(2k),
/// Pi_eps = 1/f_eps'. One row per epsilon.
struct ConvergenceTable {
  std::vector<double> eps;
  std::vector<int> orders;
  Eigen::MatrixXd sup;  // eps_list.size() x orders.size()
};

ConvergenceTable convergence_report(int k, const DesingProfile& pr,
                                    const std::vector<double>& eps_list);

}  // namespace bsurf
