#pragma once

#include "cbpsk/constellation.hpp"
#include "cbpsk/quadrature.hpp"

namespace cbpsk {

/// Received-signal density p(y) for a constellation in AWGN: a Gaussian
/// mixture with per-dimension variance noise.per_dimension_variance().
/// Evaluation is done in the log domain (log-sum-exp), so log2_density never
/// returns -inf for finite y.
class MixtureDensity {
 public:
  MixtureDensity(const Constellation& c, const AwgnSpec& noise);

  double log2_density(double y_re, double y_im = 0.0) const;
  double operator()(double y_re, double y_im = 0.0) const;

  Dimensionality dimensionality() const { return dim_; }
  double per_dimension_variance() const { return var_; }
  double max_point_radius() const { return max_radius_; }

 private:
  std::vector<Point> points_;
  std::vector<double> log_priors_;
  double var_;          // per-dimension variance
  double log2_norm_;    // log2 of the Gaussian normalization constant
  double max_radius_;
  Dimensionality dim_;
};

/// Builds the received-signal mixture density; dimensionalities must match.
MixtureDensity output_density(const Constellation& c, const AwgnSpec& noise);

/// Differential entropy of the noise alone, in bits:
/// real: log2 sqrt(2 pi e sigma2); complex: log2(pi e sigma2).
double noise_entropy(const AwgnSpec& noise);

/// Constellation-constrained rate H(Y) - H(N) in bits per symbol, clamped to
/// [0, log2 |alphabet|].  An unclamped value outside that range by more than
/// 1e-6 raises QuadratureError.
double mutual_information(const Constellation& c, const AwgnSpec& noise,
                          const QuadratureSpec& quad = QuadratureSpec::hermite());

/// Rate of the two-point alphabet {-A, +A} on the in-phase axis of the
/// complex-baseband channel, as a function of snr = A^2/sigma2 >= 0.
/// Single-integral form in the log-likelihood-ratio variable, which is
/// Gaussian with mean 4*snr and variance 8*snr:
///   R = 1 - (1/sqrt(pi)) sum_i w_i log2(1 + exp(-(4 snr + 4 sqrt(snr) t_i))).
/// Returns exactly 0 at snr = 0.
double mi_bpsk(double snr, const QuadratureSpec& quad = QuadratureSpec::hermite());

/// Shannon capacity of the complex-baseband channel, log2(1 + snr) bits.
double capacity(double snr);

/// Rate curve of a constellation over a strictly increasing, non-negative
/// linear SNR grid (mean symbol energy / sigma2); a grid value of 0 yields
/// rate 0.  The result is monotone non-decreasing within 1e-9.
RateCurve sweep_rate(const Constellation& c, const std::vector<double>& snr_grid,
                     const QuadratureSpec& quad = QuadratureSpec::hermite());

namespace detail {
/// Full 2-D tensor-product evaluation, bypassing the in-phase-axis reduction;
/// for cross-route checks.
double mutual_information_tensor(const Constellation& c, const AwgnSpec& noise,
                                 const QuadratureSpec& quad);
double softplus2(double u);  // log2(1 + exp(u)), overflow-safe
}  // namespace detail

}  // namespace cbpsk
