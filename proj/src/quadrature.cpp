#include "bsurf/quadrature.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "bsurf/form.hpp"
#include "bsurf/surface.hpp"

namespace bsurf {

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (positive half; the rule
// is symmetric). Gauss points are the even-index Kronrod nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
  double kronrod;
  double error;
};

PanelResult gk15(const std::function<double(double)>& fn, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = fn(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double fsum = fn(c - x) + fn(c + x);
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  return {resk * h, std::abs((resk - resg) * h)};
}

double adapt(const std::function<double(double)>& fn, double a, double b, double tol_abs,
             int depth, int max_depth) {
  PanelResult r = gk15(fn, a, b);
  if (!std::isfinite(r.kronrod)) throw QuadratureError("non-finite integrand value");
  if (r.error <= tol_abs || r.error <= 1e-15 * (1.0 + std::abs(r.kronrod))) return r.kronrod;
  if (depth >= max_depth)
    throw QuadratureError("adaptive quadrature did not converge (subdivision limit)");
  const double c = 0.5 * (a + b);
  return adapt(fn, a, c, 0.5 * tol_abs, depth + 1, max_depth) +
         adapt(fn, c, b, 0.5 * tol_abs, depth + 1, max_depth);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& fn, double a, double b,
                          double tol, int max_depth) {
  if (!(a < b)) throw QuadratureError("integration bounds must satisfy a < b");
  if (!(tol > 0)) throw QuadratureError("tolerance must be positive");
  PanelResult scale = gk15(fn, a, b);
  const double tol_abs = 0.5 * tol * (1.0 + std::abs(scale.kronrod));
  return adapt(fn, a, b, tol_abs, 0, max_depth);
}

double integrate_with_breakpoints(const std::function<double(double)>& fn, double a, double b,
                                  double tol, std::vector<double> breakpoints) {
  if (!(a < b)) throw QuadratureError("integration bounds must satisfy a < b");
  breakpoints.push_back(a);
  breakpoints.push_back(b);
  std::sort(breakpoints.begin(), breakpoints.end());
  std::vector<double> pts;
  for (double x : breakpoints) {
    if (x < a || x > b) continue;
    if (pts.empty() || x > pts.back()) pts.push_back(x);
  }
  double total = 0;
  const double seg_tol = tol / static_cast<double>(pts.size());
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    total += integrate_adaptive(fn, pts[i], pts[i + 1], seg_tol);
  return total;
}

double finite_part_power(int i, int m) {
  if (m < 1 || i < 0 || i > m - 1) throw QuadratureError("finite_part_power: index out of range");
  const int e = i - m;
  // Odd exponent: the integrand is odd, the symmetric integral vanishes.
  if (e % 2 != 0) return 0.0;
  return 2.0 / static_cast<double>(e + 1);
}

RegVolNumeric regularized_volume_numeric(const SurfacePresentation& p, const BmFormData& w,
                                         const RegVolNumericOptions& opts) {
  OrientationGauge g = orientation_gauge(p);
  const int m = w.m;

  double face_total = 0;
  for (const auto& f : p.faces) face_total += g.face.at(f.id) * w.volumes.at(f.id);

  // Tube integral over eps < |x| < 1 of the combined radial profile.
  auto tube_at = [&](double eps) {
    double total = 0;
    for (const auto& c : p.curves) {
      const Eigen::VectorXd& a = w.periods.at(c.id);
      auto profile = [&](double x) {
        double s = 0;
        for (int i = 0; i < m; ++i) s += a(i) * std::pow(x, i - m);
        return s;
      };
      double v = integrate_adaptive(profile, eps, 1.0, opts.tol) +
                 integrate_adaptive(profile, -1.0, -eps, opts.tol);
      total += g.curve.at(c.id) * v;
    }
    return total;
  };

  const int rows = opts.j_max - opts.j_min + 1;
  const int cols = m + 1;  // 1, eps^-1 .. eps^-(m-1), ln(1/eps)
  if (rows < cols) throw QuadratureError("epsilon grid too small for the fit basis");
  Eigen::MatrixXd A(rows, cols);
  Eigen::VectorXd y(rows);
  for (int r = 0; r < rows; ++r) {
    const double eps = std::ldexp(1.0, -(opts.j_min + r));
    y(r) = tube_at(eps);
    A(r, 0) = 1.0;
    for (int j = 1; j <= m - 1; ++j) A(r, j) = std::pow(eps, -j);
    A(r, cols - 1) = std::log(1.0 / eps);
  }

  // Row weights equalize the relative quadrature noise; column scaling keeps
  // the Vandermonde-type system well conditioned.
  Eigen::VectorXd rw(rows);
  for (int r = 0; r < rows; ++r) rw(r) = 1.0 / (1.0 + std::abs(y(r)));
  Eigen::MatrixXd As = rw.asDiagonal() * A;
  Eigen::VectorXd ys = rw.asDiagonal() * y;
  Eigen::VectorXd cs(cols);
  for (int j = 0; j < cols; ++j) {
    cs(j) = As.col(j).norm();
    if (cs(j) == 0) cs(j) = 1.0;
    As.col(j) /= cs(j);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(As, Eigen::ComputeThinU | Eigen::ComputeThinV);
  RegVolNumeric out;
  out.condition = svd.singularValues()(0) / svd.singularValues()(cols - 1);
  if (!(out.condition < opts.cond_limit))
    throw QuadratureError("ill-conditioned regularization fit; condition estimate " +
                          std::to_string(out.condition));
  Eigen::VectorXd coeff = svd.solve(ys);
  for (int j = 0; j < cols; ++j) coeff(j) /= cs(j);

  out.value = face_total + coeff(0);
  out.log_coeff = coeff(cols - 1);
  out.log_warning = std::abs(out.log_coeff) > opts.log_warn;
  return out;
}

}  // namespace bsurf
