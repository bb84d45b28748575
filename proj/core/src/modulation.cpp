#include "cbpsk/modulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cbpsk {

namespace {

constexpr double kLog2E = std::numbers::log2e;
constexpr double kInvSqrtPi = 0.56418958354775628695;

double require_matching_dims(const Constellation& c, const AwgnSpec& n) {
  if (c.dimensionality() != n.dimensionality) {
    throw std::invalid_argument(
        "constellation and noise dimensionalities do not match");
  }
  return n.per_dimension_variance();
}

// H(Y) for a 1-D Gaussian mixture (levels mu_j, common variance var):
// sum_j prior_j E_{N(mu_j, var)}[-log2 p(Y)], each expectation by the rule.
double mixture_entropy_1d(const std::vector<double>& levels,
                          const std::vector<double>& log_priors, double var,
                          const HermiteRule& rule) {
  const double sd = std::sqrt(var);
  const std::size_t m = levels.size();
  const double log2_norm = 0.5 * std::log2(2.0 * std::numbers::pi * var);

  auto nll = [&](double y) {
    double max_e = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < m; ++j) {
      const double d = y - levels[j];
      const double e = log_priors[j] - d * d / (2.0 * var);
      max_e = std::max(max_e, e);
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double d = y - levels[j];
      acc += std::exp(log_priors[j] - d * d / (2.0 * var) - max_e);
    }
    return -(max_e + std::log(acc)) * kLog2E + log2_norm;
  };

  double h = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    double acc = 0.0;
    for (int i = 0; i < rule.order(); ++i) {
      acc += rule.weights[i] * nll(levels[j] + std::numbers::sqrt2 * sd * rule.nodes[i]);
    }
    h += std::exp(log_priors[j]) * kInvSqrtPi * acc;
  }
  return h;
}

double mixture_entropy_2d(const MixtureDensity& p, const Constellation& c,
                          const HermiteRule& rule) {
  const double sd = std::sqrt(p.per_dimension_variance());
  double h = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const Point mu = c.points()[j];
    double acc = 0.0;
    for (int a = 0; a < rule.order(); ++a) {
      const double yr = mu.re + std::numbers::sqrt2 * sd * rule.nodes[a];
      double inner = 0.0;
      for (int b = 0; b < rule.order(); ++b) {
        const double yi = mu.im + std::numbers::sqrt2 * sd * rule.nodes[b];
        inner -= rule.weights[b] * p.log2_density(yr, yi);
      }
      acc += rule.weights[a] * inner;
    }
    h += c.priors()[j] * acc * kInvSqrtPi * kInvSqrtPi;
  }
  return h;
}

double clamp_rate(double mi, double max_rate) {
  if (mi < -1e-6 || mi > max_rate + 1e-6) {
    throw QuadratureError("mutual_information: value " + std::to_string(mi) +
                          " outside [0, " + std::to_string(max_rate) +
                          "] beyond tolerance; integration is inconsistent");
  }
  return std::clamp(mi, 0.0, max_rate);
}

}  // namespace

MixtureDensity::MixtureDensity(const Constellation& c, const AwgnSpec& noise)
    : points_(c.points()),
      var_(require_matching_dims(c, noise)),
      dim_(c.dimensionality()) {
  log_priors_.reserve(c.size());
  for (double p : c.priors()) log_priors_.push_back(std::log(p));
  const int ndim = dim_ == Dimensionality::real ? 1 : 2;
  log2_norm_ = 0.5 * ndim * std::log2(2.0 * std::numbers::pi * var_);
  max_radius_ = 0.0;
  for (const Point& p : points_) {
    max_radius_ = std::max(max_radius_, std::hypot(p.re, p.im));
  }
}

double MixtureDensity::log2_density(double y_re, double y_im) const {
  double max_e = -std::numeric_limits<double>::infinity();
  const std::size_t m = points_.size();
  for (std::size_t j = 0; j < m; ++j) {
    const double dr = y_re - points_[j].re;
    const double di = dim_ == Dimensionality::real ? 0.0 : y_im - points_[j].im;
    const double e = log_priors_[j] - (dr * dr + di * di) / (2.0 * var_);
    max_e = std::max(max_e, e);
  }
  double acc = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double dr = y_re - points_[j].re;
    const double di = dim_ == Dimensionality::real ? 0.0 : y_im - points_[j].im;
    acc += std::exp(log_priors_[j] - (dr * dr + di * di) / (2.0 * var_) - max_e);
  }
  return (max_e + std::log(acc)) * kLog2E - log2_norm_;
}

double MixtureDensity::operator()(double y_re, double y_im) const {
  return std::exp2(log2_density(y_re, y_im));
}

MixtureDensity output_density(const Constellation& c, const AwgnSpec& noise) {
  return MixtureDensity(c, noise);
}

double noise_entropy(const AwgnSpec& noise) {
  if (noise.dimensionality == Dimensionality::real) {
    return 0.5 * std::log2(2.0 * std::numbers::pi * std::numbers::e * noise.sigma2);
  }
  return std::log2(std::numbers::pi * std::numbers::e * noise.sigma2);
}

double mutual_information(const Constellation& c, const AwgnSpec& noise,
                          const QuadratureSpec& quad) {
  quad.validate();
  const double var = require_matching_dims(c, noise);
  const double max_rate = std::log2(static_cast<double>(c.size()));
  const double sd = std::sqrt(var);

  std::vector<double> log_priors;
  log_priors.reserve(c.size());
  for (double p : c.priors()) log_priors.push_back(std::log(p));

  if (quad.method == QuadratureMethod::adaptive_interval) {
    if (!c.on_real_axis()) {
      throw std::invalid_argument(
          "mutual_information: adaptive_interval supports in-phase-axis "
          "alphabets only");
    }
    // One pass over f(y) = p(y) * (-log2 p(y)) for the 1-D in-phase mixture,
    // window chosen so shift +- radius*scale covers every point plus 10 sigma.
    std::vector<double> levels;
    levels.reserve(c.size());
    for (const Point& p : c.points()) levels.push_back(p.re);
    const MixtureDensity p(Constellation::make_real(levels, c.priors(), c.name()),
                           AwgnSpec(var, Dimensionality::real));
    auto f = [&](double y) {
      const double l2 = p.log2_density(y, 0.0);
      return -std::exp2(l2) * l2;
    };
    const AffineMap map{0.0, (p.max_point_radius() + 10.0 * sd) /
                                 kAdaptiveTruncationRadius};
    double h = integrate_density_functional(f, quad, map);
    if (c.dimensionality() == Dimensionality::complex) {
      // quadrature dimension carries noise only
      h += 0.5 * std::log2(2.0 * std::numbers::pi * std::numbers::e * var);
    }
    return clamp_rate(h - noise_entropy(noise), max_rate);
  }

  const HermiteRule& rule = hermite_rule(quad.order);
  double h;
  if (c.dimensionality() == Dimensionality::real || c.on_real_axis()) {
    std::vector<double> levels;
    levels.reserve(c.size());
    for (const Point& p : c.points()) levels.push_back(p.re);
    h = mixture_entropy_1d(levels, log_priors, var, rule);
    if (c.dimensionality() == Dimensionality::complex) {
      h += 0.5 * std::log2(2.0 * std::numbers::pi * std::numbers::e * var);
    }
  } else {
    const MixtureDensity p(c, noise);
    h = mixture_entropy_2d(p, c, rule);
  }
  return clamp_rate(h - noise_entropy(noise), max_rate);
}

double mi_bpsk(double snr, const QuadratureSpec& quad) {
  if (!(snr >= 0.0) || !std::isfinite(snr)) {
    throw std::invalid_argument("mi_bpsk: snr must be finite and >= 0");
  }
  quad.validate();
  if (snr == 0.0) return 0.0;

  if (quad.method == QuadratureMethod::adaptive_interval) {
    // integrand written with the completed square -(x - 4g)^2/(16g), which
    // avoids the overflowing exp(-g) * exp(x/2 - x^2/16g) split
    const double c = 1.0 / (4.0 * std::sqrt(std::numbers::pi * snr));
    auto f = [&](double x) {
      const double d = x - 4.0 * snr;
      return c * std::exp(-d * d / (16.0 * snr)) * detail::softplus2(-x);
    };
    const AffineMap map{4.0 * snr, std::sqrt(8.0 * snr)};
    return 1.0 - integrate_density_functional(f, quad, map);
  }

  const HermiteRule& rule = hermite_rule(quad.order);
  const double mean = 4.0 * snr;
  const double scale = 4.0 * std::sqrt(snr);
  double acc = 0.0;
  for (int i = 0; i < rule.order(); ++i) {
    acc += rule.weights[i] * detail::softplus2(-(mean + scale * rule.nodes[i]));
  }
  return 1.0 - kInvSqrtPi * acc;
}

double capacity(double snr) {
  if (!(snr >= 0.0) || !std::isfinite(snr)) {
    throw std::invalid_argument("capacity: snr must be finite and >= 0");
  }
  return std::log1p(snr) * kLog2E;
}

RateCurve sweep_rate(const Constellation& c, const std::vector<double>& snr_grid,
                     const QuadratureSpec& quad) {
  if (snr_grid.empty()) {
    throw std::invalid_argument("sweep_rate: empty grid");
  }
  for (std::size_t i = 0; i < snr_grid.size(); ++i) {
    if (!(snr_grid[i] >= 0.0) || !std::isfinite(snr_grid[i])) {
      throw std::invalid_argument("sweep_rate: grid must be non-negative");
    }
    if (i > 0 && !(snr_grid[i] > snr_grid[i - 1])) {
      throw std::invalid_argument("sweep_rate: grid must be strictly increasing");
    }
  }
  RateCurve curve;
  curve.snr_axis = snr_grid;
  curve.scheme = c.name();
  curve.convention = RateCurve::SnrConvention::linear_es_over_n0;
  curve.rates.reserve(snr_grid.size());
  const double energy = c.mean_energy();
  for (double s : snr_grid) {
    if (s == 0.0) {
      curve.rates.push_back(0.0);
      continue;
    }
    const AwgnSpec noise(energy / s, c.dimensionality());
    curve.rates.push_back(mutual_information(c, noise, quad));
  }
  for (std::size_t i = 0; i + 1 < curve.rates.size(); ++i) {
    if (curve.rates[i + 1] < curve.rates[i] - 1e-9) {
      throw QuadratureError("sweep_rate: rate curve for " + c.name() +
                            " is not monotone at index " + std::to_string(i));
    }
  }
  curve.validate();
  return curve;
}

namespace detail {

double softplus2(double u) {
  if (u > 0.0) {
    return (u + std::log1p(std::exp(-u))) * kLog2E;
  }
  return std::log1p(std::exp(u)) * kLog2E;
}

double mutual_information_tensor(const Constellation& c, const AwgnSpec& noise,
                                 const QuadratureSpec& quad) {
  quad.validate();
  require_matching_dims(c, noise);
  if (c.dimensionality() != Dimensionality::complex ||
      quad.method != QuadratureMethod::hermite_gaussian) {
    throw std::invalid_argument(
        "mutual_information_tensor: complex alphabet and hermite rule required");
  }
  const MixtureDensity p(c, noise);
  const double h = mixture_entropy_2d(p, c, hermite_rule(quad.order));
  const double max_rate = std::log2(static_cast<double>(c.size()));
  return clamp_rate(h - noise_entropy(noise), max_rate);
}

}  // namespace detail

}  // namespace cbpsk
