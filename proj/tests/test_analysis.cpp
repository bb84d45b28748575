#include "cbpsk/analysis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cbpsk/modulation.hpp"
#include "doctest.h"
#include "oracle_reference.hpp"

using namespace cbpsk;

namespace {
constexpr double kLog2E = 1.4426950408889634;
}

TEST_CASE("derivative matches the frozen reference values") {
  // tolerance sized to the default hermite rule's mid-band truncation
  for (const auto& row : cbpsk_test::kTwoPointRateDerivRef) {
    CHECK(std::abs(mi_bpsk_derivative(row[0]) - row[1]) < 1e-7);
  }
}

TEST_CASE("analytic and finite-difference routes agree") {
  for (double g : {1e-2, 0.1, 1.0, 10.0, 100.0}) {
    const DerivativeReport rep = derivative_report(g);
    CHECK(rep.gamma == g);
    CHECK(rep.step > 0.0);
    CHECK(rep.step < g);
    const double tol = std::max(1e-4, 1e-3 * std::abs(rep.analytic_value));
    CHECK(std::abs(rep.analytic_value - rep.finite_diff_value) <= tol);
  }
}

TEST_CASE("the two routes hand over smoothly at the crossover") {
  // mi_bpsk_derivative switches from the finite difference to the closed
  // quadrature form at 1e-2; on either side it must match the report's value
  // for the route it picked, and the routes themselves stay consistent
  const DerivativeReport below = derivative_report(0.995e-2);
  CHECK(mi_bpsk_derivative(0.995e-2) == below.finite_diff_value);
  CHECK(std::abs(below.analytic_value - below.finite_diff_value) < 1e-6);

  const DerivativeReport above = derivative_report(1.005e-2);
  CHECK(mi_bpsk_derivative(1.005e-2) == above.analytic_value);
  CHECK(std::abs(above.analytic_value - above.finite_diff_value) < 1e-6);
}

TEST_CASE("derivative is positive and decreasing") {
  double prev = mi_bpsk_derivative(0.005);
  for (double g : {0.02, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    const double d = mi_bpsk_derivative(g);
    CHECK(d > 0.0);
    CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("extrapolated slope at the origin is log2(e)") {
  CHECK(std::abs(derivative_limit_at_zero() - kLog2E) < 1e-3);
}

TEST_CASE("first-order model bounds the rate from above") {
  for (double g : {1e-6, 1e-4, 1e-2, 0.5, 2.0}) {
    CHECK(taylor_rate_approx(g) >= mi_bpsk(g));
  }
  // and is asymptotically tight: R = log2(e) (g - g^2 + ...)
  const double g = 1e-4;
  const double ratio = mi_bpsk(g) / taylor_rate_approx(g);
  CHECK(std::abs(ratio - (1.0 - g)) < 1e-6);
  CHECK(taylor_rate_approx(0.0) == 0.0);
  CHECK_THROWS_AS(taylor_rate_approx(-1e-9), std::invalid_argument);
}

TEST_CASE("derivative domain ends at zero, with a pointer to the limit") {
  CHECK_THROWS_AS(mi_bpsk_derivative(0.0), std::invalid_argument);
  CHECK_THROWS_AS(mi_bpsk_derivative(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(derivative_report(0.0), std::invalid_argument);
  try {
    mi_bpsk_derivative(0.0);
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("derivative_limit_at_zero") !=
          std::string::npos);
  }
}

TEST_CASE("three-point extrapolation is exact on quadratics") {
  const double xs[3] = {0.04, 0.02, 0.01};
  double fs[3];
  for (int i = 0; i < 3; ++i) fs[i] = 3.0 - 2.0 * xs[i] + 5.0 * xs[i] * xs[i];
  CHECK(std::abs(detail::richardson_extrapolate(xs, fs) - 3.0) < 1e-12);
}
