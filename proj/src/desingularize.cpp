#include "bsurf/desingularize.hpp"

#include <cmath>
#include <stdexcept>

#include "bsurf/quadrature.hpp"

namespace bsurf {

namespace {

double outer_f(int k, double x) {
  const int q = 2 * k - 1;
  const double s = x > 0 ? 2.0 : -2.0;
  return -1.0 / (q * std::pow(x, q)) + s;
}

double outer_fprime(int k, double x) { return std::pow(x, -2 * k); }

}  // namespace

double DesingProfile::f(double x) const {
  if (std::abs(x) > 1.0) return outer_f(k, x);
  double acc = 0;
  double xp = x;  // x^(2j+1)
  for (int j = 0; j < odd_coeffs.size(); ++j) {
    acc += odd_coeffs(j) * xp;
    xp *= x * x;
  }
  return acc;
}

double DesingProfile::fprime(double x) const {
  if (std::abs(x) > 1.0) return outer_fprime(k, x);
  double acc = 0;
  double xp = 1.0;  // x^(2j)
  for (int j = 0; j < odd_coeffs.size(); ++j) {
    acc += odd_coeffs(j) * (2 * j + 1) * xp;
    xp *= x * x;
  }
  return acc;
}

double DesingProfile::f_eps(double x, double eps) const {
  return std::pow(eps, -(2 * k - 1)) * f(x / eps);
}

double DesingProfile::fprime_eps(double x, double eps) const {
  return std::pow(eps, -2 * k) * fprime(x / eps);
}

int default_match_order(int k) { return std::min(2 * k, 3); }

DesingProfile build_profile(int k, int match_order) {
  if (k < 1) throw std::invalid_argument("desingularization order k must be positive");
  if (match_order < 1 || match_order > 4)
    throw std::invalid_argument("match order must lie in 1..4");
  const int n = match_order + 1;  // unknown odd coefficients b_j, j = 0..N

  // Conditions: r-th derivative of sum_j b_j x^(2j+1) at x = 1 equals the
  // r-th derivative of the outer law, r = 0..N. The derivative of x^p is the
  // falling factorial p (p-1) ... (p-r+1).
  Eigen::MatrixXd A(n, n);
  Eigen::VectorXd rhs(n);
  const int q = 2 * k - 1;
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j < n; ++j) {
      double c = 1;
      for (int s = 0; s < r; ++s) c *= (2 * j + 1 - s);
      A(r, j) = c;
    }
    if (r == 0) {
      rhs(r) = -1.0 / q + 2.0;
    } else {
      // d^r/dx^r [-(1/q) x^-q] at 1 = (-1)^(r+1) (q+1)(q+2)...(q+r-1).
      double c = 1;
      for (int s = 1; s < r; ++s) c *= (q + s);
      rhs(r) = ((r % 2 == 1) ? 1.0 : -1.0) * c;
    }
  }
  DesingProfile pr;
  pr.k = k;
  pr.match_order = match_order;
  pr.odd_coeffs = A.colPivHouseholderQr().solve(rhs);

  for (int i = 0; i <= 2000; ++i) {
    const double x = -1.0 + i * 1e-3;
    if (!(pr.fprime(x) > 0))
      throw std::invalid_argument(
          "profile derivative is not positive on [-1,1]; use a smaller match order (k=" +
          std::to_string(k) + ", N=" + std::to_string(match_order) + ")");
  }
  return pr;
}

std::vector<double> profile_moments(const DesingProfile& pr, double tol) {
  std::vector<double> mom(2 * pr.k);
  for (int i = 0; i < 2 * pr.k; ++i) {
    if (i % 2 == 1) {
      mom[i] = 0.0;  // f' even, odd moment vanishes
      continue;
    }
    mom[i] = integrate_adaptive([&](double s) { return pr.fprime(s) * std::pow(s, i); }, -1.0,
                                1.0, tol);
  }
  return mom;
}

namespace {

void require_even_order(const BmFormData& w, const DesingProfile& pr) {
  if (w.m % 2 != 0)
    throw std::invalid_argument("desingularization is defined for even orders only");
  if (w.m != 2 * pr.k)
    throw std::invalid_argument("profile order 2k=" + std::to_string(2 * pr.k) +
                                " does not match form order m=" + std::to_string(w.m));
}

}  // namespace

double desing_total_volume_closed(const SurfacePresentation& p, const BmFormData& w, double eps,
                                  const DesingProfile& pr) {
  require_even_order(w, pr);
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must lie in (0, 1)");
  OrientationGauge g = orientation_gauge(p);
  const int m = w.m;
  std::vector<double> mom = profile_moments(pr);

  double total = 0;
  for (const auto& f : p.faces) total += g.face.at(f.id) * w.volumes.at(f.id);
  for (const auto& c : p.curves) {
    const Eigen::VectorXd& a = w.periods.at(c.id);
    double tube = 0;
    for (int i = 0; i < m; i += 2) {
      const double ep = std::pow(eps, i - m + 1);
      tube += ((2.0 / (i - m + 1)) * (1.0 - ep) + ep * mom[i]) * a(i);
    }
    total += g.curve.at(c.id) * tube;
  }
  return total;
}

DesingVolumeReport desing_total_volume_numeric(const SurfacePresentation& p, const BmFormData& w,
                                               double eps, const DesingProfile& pr, double tol) {
  require_even_order(w, pr);
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must lie in (0, 1)");
  OrientationGauge g = orientation_gauge(p);
  const int m = w.m;

  double total = 0;
  for (const auto& f : p.faces) total += g.face.at(f.id) * w.volumes.at(f.id);
  for (const auto& c : p.curves) {
    const Eigen::VectorXd& a = w.periods.at(c.id);
    auto density = [&](double x) {
      double tangent = 0;
      for (int i = 0; i < m; ++i) tangent += a(i) * std::pow(x, i);
      const double radial =
          std::abs(x) <= eps ? pr.fprime_eps(x, eps) : std::pow(x, -m);
      return radial * tangent;
    };
    total += g.curve.at(c.id) *
             integrate_with_breakpoints(density, -1.0, 1.0, tol, {-eps, eps});
  }

  DesingVolumeReport rep;
  rep.epsilon = eps;
  rep.numeric = total;
  rep.closed_form = desing_total_volume_closed(p, w, eps, pr);
  rep.relative_error = std::abs(rep.closed_form - rep.numeric) / (1.0 + std::abs(rep.closed_form));
  return rep;
}

ConvergenceTable convergence_report(int k, const DesingProfile& pr,
                                    const std::vector<double>& eps_list) {
  for (size_t i = 0; i + 1 < eps_list.size(); ++i)
    if (!(eps_list[i] > eps_list[i + 1]))
      throw std::invalid_argument("eps list must be strictly decreasing");
  for (double e : eps_list)
    if (!(e > 0 && e < 1)) throw std::invalid_argument("eps must lie in (0, 1)");

  ConvergenceTable t;
  t.eps = eps_list;
  for (int r = 0; r < 2 * k; ++r) t.orders.push_back(r);
  t.sup.resize(static_cast<int>(eps_list.size()), 2 * k);

  const double h = 1e-3;
  for (size_t row = 0; row < eps_list.size(); ++row) {
    const double eps = eps_list[row];
    auto err = [&](double x) {
      return 1.0 / pr.fprime_eps(x, eps) - std::pow(x, 2 * k);
    };
    // Central finite differences of increasing order on a grid of |x| <= 1/2.
    std::function<double(double, int)> diff = [&](double x, int order) -> double {
      if (order == 0) return err(x);
      return (diff(x + h, order - 1) - diff(x - h, order - 1)) / (2 * h);
    };
    for (int r = 0; r < 2 * k; ++r) {
      double sup = 0;
      for (int i = -500; i <= 500; ++i) sup = std::max(sup, std::abs(diff(i * 1e-3, r)));
      t.sup(static_cast<int>(row), r) = sup;
    }
  }
  return t;
}

}  // namespace bsurf
