#include "cbpsk/constellation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace cbpsk {

namespace {

void check_priors(const std::vector<double>& priors, std::size_t n_points) {
  if (priors.size() != n_points) {
    throw std::invalid_argument("Constellation: priors size mismatch");
  }
  double sum = 0.0;
  for (double p : priors) {
    if (!(p > 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument("Constellation: priors must be positive");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("Constellation: priors must sum to 1");
  }
}

}  // namespace

Constellation::Constellation(std::vector<Point> points,
                             std::vector<double> priors, std::string name,
                             Dimensionality dim)
    : points_(std::move(points)),
      priors_(std::move(priors)),
      name_(std::move(name)),
      dim_(dim) {
  if (points_.size() < 2) {
    throw std::invalid_argument("Constellation: need at least two points");
  }
  check_priors(priors_, points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i].re) || !std::isfinite(points_[i].im)) {
      throw std::invalid_argument("Constellation: non-finite point coordinate");
    }
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (points_[i].re == points_[j].re && points_[i].im == points_[j].im) {
        throw std::invalid_argument("Constellation: coincident points");
      }
    }
  }
  mean_energy_ = 0.0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    mean_energy_ +=
        priors_[i] * (points_[i].re * points_[i].re + points_[i].im * points_[i].im);
  }
  if (!(mean_energy_ > 0.0)) {
    throw std::invalid_argument("Constellation: mean energy must be positive");
  }
}

Constellation Constellation::make_real(const std::vector<double>& amplitudes,
                                       const std::vector<double>& priors,
                                       std::string name) {
  std::vector<Point> pts;
  pts.reserve(amplitudes.size());
  for (double a : amplitudes) pts.push_back({a, 0.0});
  return Constellation(std::move(pts), priors, std::move(name),
                       Dimensionality::real);
}

Constellation Constellation::make_complex(const std::vector<Point>& points,
                                          const std::vector<double>& priors,
                                          std::string name) {
  return Constellation(points, priors, std::move(name), Dimensionality::complex);
}

Constellation Constellation::bpsk(double amplitude, Dimensionality dim) {
  if (!(amplitude > 0.0) || !std::isfinite(amplitude)) {
    throw std::invalid_argument("bpsk: amplitude must be finite and > 0");
  }
  return Constellation({{-amplitude, 0.0}, {amplitude, 0.0}}, {0.5, 0.5}, "bpsk",
                       dim);
}

Constellation Constellation::qpsk() {
  const double c = 1.0 / std::numbers::sqrt2;
  return Constellation({{c, c}, {-c, c}, {-c, -c}, {c, -c}},
                       {0.25, 0.25, 0.25, 0.25}, "qpsk",
                       Dimensionality::complex);
}

Constellation Constellation::psk8() {
  std::vector<Point> pts;
  std::vector<double> priors(8, 0.125);
  for (int k = 0; k < 8; ++k) {
    const double a = k * std::numbers::pi / 4.0;
    pts.push_back({std::cos(a), std::sin(a)});
  }
  return Constellation(std::move(pts), priors, "psk8", Dimensionality::complex);
}

Constellation Constellation::ask4(Dimensionality dim) {
  const double d = 1.0 / std::sqrt(5.0);  // unit mean energy
  return Constellation({{-3 * d, 0.0}, {-d, 0.0}, {d, 0.0}, {3 * d, 0.0}},
                       {0.25, 0.25, 0.25, 0.25}, "ask4", dim);
}

bool Constellation::on_real_axis() const {
  for (const Point& p : points_) {
    if (p.im != 0.0) return false;
  }
  return true;
}

Constellation Constellation::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw std::invalid_argument("Constellation::scaled: factor must be > 0");
  }
  std::vector<Point> pts = points_;
  for (Point& p : pts) {
    p.re *= factor;
    p.im *= factor;
  }
  return Constellation(std::move(pts), priors_, name_, dim_);
}

AwgnSpec::AwgnSpec(double sigma2_in, Dimensionality dim)
    : sigma2(sigma2_in), dimensionality(dim) {
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
    throw std::invalid_argument("AwgnSpec: sigma2 must be finite and > 0");
  }
}

double AwgnSpec::per_dimension_variance() const {
  return dimensionality == Dimensionality::real ? sigma2 : 0.5 * sigma2;
}

void RateCurve::validate() const {
  if (snr_axis.size() != rates.size()) {
    throw std::invalid_argument("RateCurve: axis/rates length mismatch");
  }
  if (snr_axis.empty()) {
    throw std::invalid_argument("RateCurve: empty curve");
  }
  for (std::size_t i = 0; i + 1 < snr_axis.size(); ++i) {
    if (!(snr_axis[i] < snr_axis[i + 1])) {
      throw std::invalid_argument("RateCurve: snr_axis must be strictly increasing");
    }
  }
  for (double r : rates) {
    if (!(r >= 0.0)) {
      throw std::invalid_argument("RateCurve: rates must be >= 0");
    }
  }
}

}  // namespace cbpsk
