#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbpsk {

inline constexpr int kDefaultHermiteOrder = 96;
// Beyond this order the orthonormal-recurrence values used for node polishing
// and Christoffel weights overflow double near the extreme nodes.
inline constexpr int kMaxHermiteOrder = 256;
// The adaptive method integrates over [shift - R*scale, shift + R*scale].
inline constexpr double kAdaptiveTruncationRadius = 10.0;

enum class QuadratureMethod { hermite_gaussian, adaptive_interval };

struct QuadratureSpec {
  QuadratureMethod method = QuadratureMethod::hermite_gaussian;
  int order = kDefaultHermiteOrder;
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_subdivisions = 48;  // recursion depth limit per segment

  static QuadratureSpec hermite(int order = kDefaultHermiteOrder);
  static QuadratureSpec adaptive(double abs_tol, double rel_tol,
                                 int max_subdivisions = 48);
  void validate() const;  // throws std::invalid_argument
};

/// Numerical-integration failure; carries the partial estimate when the
/// adaptive method runs out of subdivisions.
class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what,
                           std::optional<double> partial = std::nullopt)
      : std::runtime_error(what), partial_estimate(partial) {}
  std::optional<double> partial_estimate;
};

/// Gauss-Hermite rule for the weight exp(-t^2): sum_i w_i f(t_i) ~ integral.
/// Nodes ascend and are symmetric about zero; weights sum to sqrt(pi).
struct HermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  // w_i * exp(t_i^2), for integrands that carry their own Gaussian factor.
  std::vector<double> total_weights;
  int order() const { return static_cast<int>(nodes.size()); }
};

/// Returns the cached immutable rule for the given order (2..kMaxHermiteOrder).
const HermiteRule& hermite_rule(int order);

/// Affine change of variable y = shift + scale * t, scale > 0.
struct AffineMap {
  double shift = 0.0;
  double scale = 1.0;
};

/// Integrates f over the real line.  f must embed its own density-like decay
/// (e.g. f = p * g with p a Gaussian mixture).  hermite_gaussian evaluates
/// scale * sum_i w_i exp(t_i^2) f(shift + scale*t_i); adaptive_interval runs
/// recursive Simpson bisection on the truncated interval.
double integrate_density_functional(const std::function<double(double)>& f,
                                    const QuadratureSpec& spec,
                                    const AffineMap& map);

}  // namespace cbpsk
