#include "cbpsk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cbpsk/modulation.hpp"

namespace cbpsk {

namespace {

// Below this the closed form subtracts two 1/snr-sized terms and a central
// difference of the rate is both simpler and more accurate.
constexpr double kAnalyticCrossover = 1e-2;

double analytic_derivative(double snr, const QuadratureSpec& quad) {
  if (quad.method == QuadratureMethod::adaptive_interval) {
    // The derivative kernel decays like the rate kernel; reuse the node set
    // of the default Hermite rule rather than re-deriving window bounds.
    return analytic_derivative(snr, QuadratureSpec::hermite());
  }
  const HermiteRule& rule = hermite_rule(quad.order);
  const double mean = 4.0 * snr;
  const double scale = 4.0 * std::sqrt(snr);
  double sum_plain = 0.0;   // E[L(x)]
  double sum_square = 0.0;  // E[L(x) x^2]
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = mean + scale * rule.nodes[i];
    const double l = detail::softplus2(-x);
    sum_plain += rule.weights[i] * l;
    sum_square += rule.weights[i] * l * x * x;
  }
  constexpr double inv_sqrt_pi = 0.56418958354775628695;
  sum_plain *= inv_sqrt_pi;
  sum_square *= inv_sqrt_pi;
  return sum_plain * (1.0 + 0.5 / snr) - sum_square / (16.0 * snr * snr);
}

double fd_step(double snr) {
  return std::min(std::max(1e-6, 1e-3 * snr), 0.5 * snr);
}

double central_difference(double snr, double h, const QuadratureSpec& quad) {
  return (mi_bpsk(snr + h, quad) - mi_bpsk(snr - h, quad)) / (2.0 * h);
}

}  // namespace

double mi_bpsk_derivative(double snr, const QuadratureSpec& quad) {
  if (!(snr > 0.0) || !std::isfinite(snr)) {
    throw std::invalid_argument(
        "mi_bpsk_derivative: snr must be finite and > 0; "
        "use derivative_limit_at_zero() for the snr -> 0 limit");
  }
  quad.validate();
  if (snr >= kAnalyticCrossover) {
    return analytic_derivative(snr, quad);
  }
  return central_difference(snr, fd_step(snr), quad);
}

DerivativeReport derivative_report(double snr, const QuadratureSpec& quad) {
  if (!(snr > 0.0) || !std::isfinite(snr)) {
    throw std::invalid_argument("derivative_report: snr must be finite and > 0");
  }
  quad.validate();
  DerivativeReport rep;
  rep.gamma = snr;
  rep.analytic_value = analytic_derivative(snr, quad);
  rep.step = fd_step(snr);
  rep.finite_diff_value = central_difference(snr, rep.step, quad);
  return rep;
}

double derivative_limit_at_zero(const QuadratureSpec& quad) {
  quad.validate();
  const double xs[3] = {1e-2, 1e-3, 1e-4};
  double fs[3];
  for (int i = 0; i < 3; ++i) {
    fs[i] = mi_bpsk_derivative(xs[i], quad);
  }

  // Neville-style ladder: value at the smallest sample, then linear and
  // quadratic extrapolants to zero.  Each rung should tighten the estimate;
  // if it does not, the samples are not in the asymptotic regime.
  const double e0 = fs[2];
  const double e1 = (xs[1] * fs[2] - xs[2] * fs[1]) / (xs[1] - xs[2]);
  const double e2 = detail::richardson_extrapolate(xs, fs);
  if (std::abs(e2 - e1) > std::abs(e1 - e0)) {
    std::ostringstream msg;
    msg << "derivative_limit_at_zero: extrapolation failed to contract"
        << " (e0=" << e0 << ", e1=" << e1 << ", e2=" << e2 << ")";
    throw QuadratureError(msg.str(), e2);
  }
  return e2;
}

double taylor_rate_approx(double snr) {
  if (!(snr >= 0.0) || !std::isfinite(snr)) {
    throw std::invalid_argument("taylor_rate_approx: snr must be finite and >= 0");
  }
  return std::numbers::log2e * snr;
}

namespace detail {

double richardson_extrapolate(const double xs[3], const double fs[3]) {
  double out = 0.0;
  for (int i = 0; i < 3; ++i) {
    double term = fs[i];
    for (int j = 0; j < 3; ++j) {
      if (j != i) term *= -xs[j] / (xs[i] - xs[j]);
    }
    out += term;
  }
  return out;
}

}  // namespace detail

}  // namespace cbpsk
