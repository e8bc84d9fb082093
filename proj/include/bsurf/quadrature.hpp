#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace bsurf {

struct SurfacePresentation;
struct BmFormData;

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive Gauss-Kronrod (G7/K15) bisection. Guarantees
/// |result - I| <= tol*(1+|I|) for smooth integrands; throws
/// QuadratureError when the subdivision limit is exceeded.
double integrate_adaptive(const std::function<double(double)>& fn, double a, double b,
                          double tol, int max_depth = 52);

/// Same driver with mandatory panel splits at the given interior points
/// (kinks of piecewise-smooth integrands must be panel boundaries).
double integrate_with_breakpoints(const std::function<double(double)>& fn, double a, double b,
                                  double tol, std::vector<double> breakpoints);

/// The epsilon-independent part of the singular power integral
/// int_{eps<|x|<1} x^(i-m) dx: zero for odd i-m, 2/(i-m+1) for even i-m.
double finite_part_power(int i, int m);

struct RegVolNumericOptions {
  double tol = 1e-12;   // quadrature tolerance per epsilon sample
  int j_min = 3;        // epsilon grid: 2^-j for j = j_min..j_max
  int j_max = 12;
  double log_warn = 1e-6;
  double cond_limit = 1e12;
};

struct RegVolNumeric {
  double value = 0;
  double log_coeff = 0;   // fitted coefficient of ln(1/eps); expected ~0
  double condition = 0;   // condition number of the scaled fit matrix
  bool log_warning = false;
};

/// Numeric oracle for the regularized Liouville volume: integrates the
/// radial profiles over eps<|x|<1 on a dyadic eps-grid, fits
/// c0 + sum_j c_j eps^-j + c_L ln(1/eps) by least squares and returns
/// c0 + sum of smooth face volumes.
RegVolNumeric regularized_volume_numeric(const SurfacePresentation& p, const BmFormData& w,
                                         const RegVolNumericOptions& opts = {});

}  // namespace bsurf
