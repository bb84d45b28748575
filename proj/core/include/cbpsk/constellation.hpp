#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace cbpsk {

enum class Dimensionality { real, complex };

/// One signal point; im is ignored for real-dimensionality alphabets.
struct Point {
  double re = 0.0;
  double im = 0.0;
};

/// Finite signal alphabet with priors.  Construction enforces: at least two
/// pairwise-distinct finite points, priors positive and summing to one.
class Constellation {
 public:
  static Constellation make_real(const std::vector<double>& amplitudes,
                                 const std::vector<double>& priors,
                                 std::string name);
  static Constellation make_complex(const std::vector<Point>& points,
                                    const std::vector<double>& priors,
                                    std::string name);

  /// {-amplitude, +amplitude}; by default on the in-phase axis of the
  /// complex-baseband channel.
  static Constellation bpsk(double amplitude,
                            Dimensionality dim = Dimensionality::complex);
  /// Canonical unit-mean-energy alphabets.
  static Constellation qpsk();
  static Constellation psk8();
  static Constellation ask4(Dimensionality dim = Dimensionality::complex);

  const std::vector<Point>& points() const { return points_; }
  const std::vector<double>& priors() const { return priors_; }
  const std::string& name() const { return name_; }
  Dimensionality dimensionality() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  double mean_energy() const { return mean_energy_; }
  /// True when every point lies on the in-phase axis.
  bool on_real_axis() const;

  /// Same alphabet with all coordinates multiplied by factor > 0.
  Constellation scaled(double factor) const;

 private:
  Constellation(std::vector<Point> points, std::vector<double> priors,
                std::string name, Dimensionality dim);

  std::vector<Point> points_;
  std::vector<double> priors_;
  std::string name_;
  Dimensionality dim_ = Dimensionality::real;
  double mean_energy_ = 0.0;
};

/// AWGN channel noise.  sigma2 is the total noise power: a real-dimensionality
/// channel carries all of it in one dimension, a complex one is circularly
/// symmetric with per-dimension variance sigma2/2.
struct AwgnSpec {
  double sigma2;
  Dimensionality dimensionality;

  AwgnSpec(double sigma2_in, Dimensionality dim);
  double per_dimension_variance() const;
};

/// A rate (or rate-difference) curve over an SNR axis.
struct RateCurve {
  enum class SnrConvention { linear_es_over_n0, db_eb_over_n0 };

  std::vector<double> snr_axis;  // strictly increasing
  std::vector<double> rates;     // bits per symbol, >= 0
  std::string scheme;
  SnrConvention convention = SnrConvention::linear_es_over_n0;
  std::map<std::string, std::string> params;

  void validate() const;  // throws std::invalid_argument
};

}  // namespace cbpsk
