#include "cbpsk/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cbpsk/modulation.hpp"

namespace cbpsk {

namespace detail {

std::uint64_t mix_counter(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double uniform_from_counter(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(mix_counter(seed, counter) >> 11) * 0x1.0p-53;
}

}  // namespace detail

namespace {

// Two independent standard normals from two uniforms.  log1p(-u1) is exact
// at u1 = 0 and never sees log(0) since u1 < 1.
void box_muller(double u1, double u2, double& z1, double& z2) {
  const double r = std::sqrt(-2.0 * std::log1p(-u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  z1 = r * std::cos(theta);
  z2 = r * std::sin(theta);
}

std::size_t pick_symbol(const std::vector<double>& priors, double u) {
  double cum = 0.0;
  for (std::size_t j = 0; j + 1 < priors.size(); ++j) {
    cum += priors[j];
    if (u < cum) return j;
  }
  return priors.size() - 1;
}

// Runs fn(block_begin, block_end, slot) over kMcBlockSize-sized blocks,
// distributing blocks across threads; slot is the block index into whatever
// per-block storage the caller reduces afterwards.
template <typename Fn>
void run_blocks(std::uint64_t n, unsigned n_threads, std::uint64_t n_blocks,
                Fn&& fn) {
  unsigned want = n_threads;
  if (want == 0) {
    want = std::thread::hardware_concurrency();
    if (want == 0) want = 1;
  }
  if (static_cast<std::uint64_t>(want) > n_blocks) {
    want = static_cast<unsigned>(n_blocks);
  }
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= n_blocks) return;
      const std::uint64_t begin = b * kMcBlockSize;
      const std::uint64_t end = std::min(n, begin + kMcBlockSize);
      fn(begin, end, b);
    }
  };
  if (want <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(want);
  for (unsigned t = 0; t < want; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

// Anything below 2^-1022 rounds to a subnormal or zero density; clamp the
// log there and count how often it happens.
constexpr double kLog2DensityFloor = -1022.0;

}  // namespace

double q_function(double x) { return 0.5 * std::erfc(x * std::numbers::sqrt2 / 2.0); }

MiEstimate simulate_mi(const Constellation& c, const AwgnSpec& noise,
                       std::uint64_t n_samples, std::uint64_t seed,
                       unsigned n_threads) {
  if (n_samples < kMcMinSamples) {
    throw std::invalid_argument("simulate_mi: need at least " +
                                std::to_string(kMcMinSamples) + " samples");
  }
  if (c.dimensionality() != noise.dimensionality) {
    throw std::invalid_argument(
        "simulate_mi: constellation and noise dimensionality differ");
  }
  const MixtureDensity density(c, noise);
  const auto& points = c.points();
  const auto& priors = c.priors();
  const double sd = std::sqrt(noise.per_dimension_variance());
  const bool complex_dim = c.dimensionality() == Dimensionality::complex;

  struct Block {
    double sum = 0.0;
    double sumsq = 0.0;
    std::uint64_t clamped = 0;
  };
  const std::uint64_t n_blocks = (n_samples + kMcBlockSize - 1) / kMcBlockSize;
  std::vector<Block> blocks(n_blocks);

  run_blocks(n_samples, n_threads, n_blocks,
             [&](std::uint64_t begin, std::uint64_t end, std::uint64_t slot) {
               Block acc;
               for (std::uint64_t k = begin; k < end; ++k) {
                 const std::uint64_t base = 3 * k;
                 const double u0 = detail::uniform_from_counter(seed, base);
                 const double u1 = detail::uniform_from_counter(seed, base + 1);
                 const double u2 = detail::uniform_from_counter(seed, base + 2);
                 double z1, z2;
                 box_muller(u1, u2, z1, z2);
                 const Point& x = points[pick_symbol(priors, u0)];
                 const double y_re = x.re + sd * z1;
                 const double y_im = complex_dim ? x.im + sd * z2 : 0.0;
                 double lp = density.log2_density(y_re, y_im);
                 if (lp < kLog2DensityFloor) {
                   lp = kLog2DensityFloor;
                   ++acc.clamped;
                 }
                 acc.sum += -lp;
                 acc.sumsq += lp * lp;
               }
               blocks[slot] = acc;
             });

  double sum = 0.0, sumsq = 0.0;
  std::uint64_t clamped = 0;
  for (const Block& b : blocks) {
    sum += b.sum;
    sumsq += b.sumsq;
    clamped += b.clamped;
  }
  if (static_cast<double>(clamped) >
      1e-4 * static_cast<double>(n_samples)) {
    throw std::runtime_error(
        "simulate_mi: " + std::to_string(clamped) +
        " of " + std::to_string(n_samples) +
        " outputs hit the density floor; model inconsistent");
  }

  const double n = static_cast<double>(n_samples);
  const double h_hat = sum / n;
  const double var = std::max(0.0, (sumsq - n * h_hat * h_hat) / (n - 1.0));
  MiEstimate est;
  est.mean = h_hat - noise_entropy(noise);
  est.std_error = std::sqrt(var / n);
  est.n_samples = n_samples;
  est.seed = seed;
  return est;
}

SicResult simulate_cocktail_sic(const CocktailParams& p, std::uint64_t n_symbols,
                                std::uint64_t seed, unsigned n_threads) {
  if (n_symbols < kMcMinSamples) {
    throw std::invalid_argument("simulate_cocktail_sic: need at least " +
                                std::to_string(kMcMinSamples) + " symbols");
  }
  const double sd = std::sqrt(p.sigma2);

  struct Block {
    std::uint64_t err1 = 0;
    std::uint64_t err2 = 0;
    std::uint64_t aligned = 0;
  };
  const std::uint64_t n_blocks = (n_symbols + kMcBlockSize - 1) / kMcBlockSize;
  std::vector<Block> blocks(n_blocks);

  run_blocks(n_symbols, n_threads, n_blocks,
             [&](std::uint64_t begin, std::uint64_t end, std::uint64_t slot) {
               Block acc;
               for (std::uint64_t k = begin; k < end; ++k) {
                 const std::uint64_t base = 4 * k;
                 const double x1 =
                     detail::uniform_from_counter(seed, base) < 0.5 ? -1.0 : 1.0;
                 const double x2 =
                     detail::uniform_from_counter(seed, base + 1) < 0.5 ? -1.0 : 1.0;
                 const double u1 = detail::uniform_from_counter(seed, base + 2);
                 const double u2 = detail::uniform_from_counter(seed, base + 3);
                 double z1, z2;
                 box_muller(u1, u2, z1, z2);
                 const double y = p.alpha * x1 + p.beta * x2 + sd * z1;
                 const double x1_hat = y < 0.0 ? -1.0 : 1.0;
                 const double y2 = y - p.alpha * x1_hat;
                 const double x2_hat = y2 < 0.0 ? -1.0 : 1.0;
                 if (x1_hat != x1) ++acc.err1;
                 if (x2_hat != x2) ++acc.err2;
                 if (x1 == x2) ++acc.aligned;
               }
               blocks[slot] = acc;
             });

  SicResult res;
  res.n_symbols = n_symbols;
  res.seed = seed;
  std::uint64_t err1 = 0, err2 = 0, aligned = 0;
  for (const Block& b : blocks) {
    err1 += b.err1;
    err2 += b.err2;
    aligned += b.aligned;
  }
  res.ber_x1 = static_cast<double>(err1) / static_cast<double>(n_symbols);
  res.ber_x2 = static_cast<double>(err2) / static_cast<double>(n_symbols);
  res.case_counts = {aligned, n_symbols - aligned};
  return res;
}

}  // namespace cbpsk
