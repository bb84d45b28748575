#pragma once

#include <array>
#include <cstdint>

#include "cbpsk/cocktail.hpp"
#include "cbpsk/constellation.hpp"

namespace cbpsk {

// Samples are drawn in fixed-size blocks and the per-block partial sums are
// combined in block order, so results are bit-identical for any thread count.
inline constexpr std::uint64_t kMcBlockSize = 65536;

// Smallest sample count accepted by the simulators; below this the normal
// error bars reported alongside the estimates are not trustworthy.
inline constexpr std::uint64_t kMcMinSamples = 10000;

struct MiEstimate {
  double mean = 0.0;       // bits per symbol
  double std_error = 0.0;  // standard error of the mean
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
};

struct SicResult {
  double ber_x1 = 0.0;
  double ber_x2 = 0.0;
  std::uint64_t n_symbols = 0;
  // [0]: symbols where the two layers carried the same sign (effective
  // amplitude alpha + beta), [1]: opposite signs (alpha - beta).
  std::array<std::uint64_t, 2> case_counts{0, 0};
  std::uint64_t seed = 0;
};

// Gaussian tail probability P(Z > x) for standard normal Z.
double q_function(double x);

// Plain Monte Carlo estimate of the mutual information between a uniformly
// (or prior-) selected constellation point and the noisy channel output:
// averages -log2 p_Y(y) over sampled outputs and subtracts the noise entropy.
// Deterministic for a given (seed, n_samples); n_threads = 0 picks the
// hardware count.  Throws std::invalid_argument for n_samples < kMcMinSamples
// and std::runtime_error if more than 0.01% of the sampled outputs land
// below the density floor (a sign the channel model is inconsistent).
MiEstimate simulate_mi(const Constellation& c, const AwgnSpec& noise,
                       std::uint64_t n_samples, std::uint64_t seed,
                       unsigned n_threads = 0);

// Two-layer transmission y = alpha*x1 + beta*x2 + noise on the detection
// axis (noise variance p.sigma2), hard successive cancellation:
// x1_hat = sign(y), then x2_hat = sign(y - alpha*x1_hat).  Reports the bit
// error rates of both stages.  Same determinism contract as simulate_mi.
SicResult simulate_cocktail_sic(const CocktailParams& p, std::uint64_t n_symbols,
                                std::uint64_t seed, unsigned n_threads = 0);

namespace detail {

// Counter-based generator: the k-th variate of a stream depends only on
// (seed, k), which is what makes the block decomposition order-free.
std::uint64_t mix_counter(std::uint64_t seed, std::uint64_t counter);
double uniform_from_counter(std::uint64_t seed, std::uint64_t counter);

}  // namespace detail

}  // namespace cbpsk
