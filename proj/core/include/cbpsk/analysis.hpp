#pragma once

#include "cbpsk/quadrature.hpp"

namespace cbpsk {

// Analytic/finite-difference pair for d(rate)/d(snr) at one point.
struct DerivativeReport {
  double gamma = 0.0;
  double analytic_value = 0.0;
  double finite_diff_value = 0.0;
  double step = 0.0;  // step used by the finite-difference check
};

// Derivative of the two-point rate with respect to the SNR argument.
//
// For snr >= 1e-2 this evaluates the closed quadrature form obtained by
// differentiating the single-integral rate under the integral sign; the
// three resulting moments share one set of nodes.  Below that the analytic
// form loses digits to cancellation (the bracket is a difference of terms
// each ~1/snr), so a central finite difference of the rate is used instead.
//
// Throws std::invalid_argument for snr <= 0: the derivative is finite only
// for positive arguments.  The limiting value at zero is available through
// derivative_limit_at_zero().
double mi_bpsk_derivative(double snr,
                          const QuadratureSpec& quad = QuadratureSpec::hermite());

// Evaluates both routes at one point so callers can see the agreement.
DerivativeReport derivative_report(double snr,
                                   const QuadratureSpec& quad = QuadratureSpec::hermite());

// Extrapolates mi_bpsk_derivative to snr -> 0+ from samples at
// {1e-2, 1e-3, 1e-4}.  The exact limit is log2(e); this routine exists to
// demonstrate that numerically.  Throws a QuadratureError carrying the
// intermediate values if the extrapolation sequence fails to contract.
double derivative_limit_at_zero(const QuadratureSpec& quad = QuadratureSpec::hermite());

// First-order small-SNR model of the two-point rate: log2(e) * snr.
double taylor_rate_approx(double snr);

namespace detail {

// Lagrange extrapolation of f to x = 0 from three (x, f) samples.
// Exposed for unit tests of the limit machinery.
double richardson_extrapolate(const double xs[3], const double fs[3]);

}  // namespace detail

}  // namespace cbpsk
