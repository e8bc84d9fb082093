#include <doctest.h>

#include <cmath>
#include <random>

#include "bsurf/desingularize.hpp"
#include "bsurf/fixtures.hpp"
#include "bsurf/form.hpp"
#include "bsurf/quadrature.hpp"

using namespace bsurf;
namespace fx = bsurf::fixtures;

namespace {
constexpr double kPi = 3.14159265358979323846;

bool close(double x, double y, double tol) {
  return std::abs(x - y) <= tol * (1.0 + std::max(std::abs(x), std::abs(y)));
}
}  // namespace

TEST_CASE("adaptive quadrature on smooth integrands") {
  CHECK(close(integrate_adaptive([](double x) { return x * x; }, 0, 1, 1e-12), 1.0 / 3.0, 1e-12));
  CHECK(close(integrate_adaptive([](double x) { return std::sin(x); }, 0, kPi, 1e-12), 2.0, 1e-12));
  CHECK(close(integrate_adaptive([](double x) { return std::exp(-x * x); }, -6, 6, 1e-12),
              std::sqrt(kPi), 1e-12));
}

TEST_CASE("polynomial exactness through degree 8") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> c(9);
    for (auto& v : c) v = coeff(rng);
    auto poly = [&](double x) {
      double acc = 0, xp = 1;
      for (double ci : c) {
        acc += ci * xp;
        xp *= x;
      }
      return acc;
    };
    double exact = 0;
    for (size_t i = 0; i < c.size(); ++i)
      exact += c[i] * (std::pow(2.0, static_cast<double>(i) + 1) -
                       std::pow(-1.0, static_cast<double>(i) + 1)) /
               (static_cast<double>(i) + 1);
    CHECK(close(integrate_adaptive(poly, -1, 2, 1e-13), exact, 1e-12));
  }
}

TEST_CASE("breakpoints handle kinks") {
  double got = integrate_with_breakpoints([](double x) { return std::abs(x); }, -1, 1, 1e-13, {0});
  CHECK(close(got, 1.0, 1e-12));
}

TEST_CASE("profile derivative integrates back to the profile") {
  DesingProfile pr = build_profile(2, 3);
  double got = integrate_adaptive([&](double s) { return pr.fprime(s); }, -1, 1, 1e-12);
  CHECK(close(got, pr.f(1) - pr.f(-1), 1e-11));
}

TEST_CASE("subdivision limit raises an error") {
  CHECK_THROWS_AS(
      integrate_adaptive([](double x) { return std::sin(1000.0 * x); }, 0, 1, 1e-14, 3),
      QuadratureError);
}

TEST_CASE("finite part of the power integral") {
  CHECK(finite_part_power(0, 1) == 0.0);
  CHECK(finite_part_power(0, 2) == doctest::Approx(-2.0));
  CHECK(finite_part_power(1, 3) == doctest::Approx(-2.0));
  CHECK(finite_part_power(2, 4) == doctest::Approx(-2.0));
  CHECK(finite_part_power(1, 2) == 0.0);
  CHECK_THROWS_AS(finite_part_power(2, 2), std::exception);

  // Parity law: zero exactly when i - m is odd; otherwise 2/(i - m + 1).
  for (int m = 1; m <= 6; ++m)
    for (int i = 0; i < m; ++i) {
      CAPTURE(i);
      CAPTURE(m);
      if ((i - m) % 2 != 0)
        CHECK(finite_part_power(i, m) == 0.0);
      else
        CHECK(finite_part_power(i, m) == doctest::Approx(2.0 / (i - m + 1)));
    }
}

TEST_CASE("numeric regularized volume agrees with the closed formula") {
  SUBCASE("order-1 sphere: total volume vanishes") {
    RegVolNumeric r = regularized_volume_numeric(fx::sphere_equator(), fx::sphere_form_m1());
    CHECK(std::abs(r.value) < 1e-9);
    CHECK_FALSE(r.log_warning);
  }
  SUBCASE("order-2 sphere: -4 pi") {
    RegVolNumeric r = regularized_volume_numeric(fx::sphere_equator(), fx::sphere_omega1());
    CHECK(close(r.value, -4.0 * kPi, 1e-9));
    CHECK(std::abs(r.log_coeff) < 1e-6);
    CHECK(r.condition < 1e6);
  }
  SUBCASE("randomized data on the torus fixtures") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    for (int trial = 0; trial < 25; ++trial) {
      const int m = 1 + static_cast<int>(rng() % 3);
      SurfacePresentation p =
          trial % 2 ? fx::torus_two_curves() : fx::sphere_equator();
      BmFormData w;
      w.m = m;
      for (const auto& c : p.curves) {
        Eigen::VectorXd a(m);
        for (int i = 0; i < m; ++i) a(i) = coeff(rng);
        w.periods[c.id] = a;
      }
      for (const auto& f : p.faces) w.volumes[f.id] = coeff(rng);
      const double closed = regularized_volume_closed(p, w);
      RegVolNumeric r = regularized_volume_numeric(p, w);
      CAPTURE(trial);
      CAPTURE(m);
      CHECK(close(r.value, closed, 1e-8));
      CHECK_FALSE(r.log_warning);
    }
  }
}
