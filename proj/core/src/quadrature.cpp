#include "cbpsk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <utility>

namespace cbpsk {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// Orthonormal Hermite polynomials for the weight exp(-t^2):
//   p0 = pi^(-1/4),  p_{k+1} = t sqrt(2/(k+1)) p_k - sqrt(k/(k+1)) p_{k-1}
// and p_n'(t) = sqrt(2n) p_{n-1}(t).
struct RecurrenceState {
  double pn = 0.0;    // p_n(t)
  double pnm1 = 0.0;  // p_{n-1}(t)
  double sumsq = 0.0; // sum_{k<n} p_k(t)^2  (Christoffel denominator)
};

RecurrenceState eval_orthonormal(int n, double t) {
  double pkm1 = 0.0;
  double pk = 0.75112554446494248286;  // pi^(-1/4)
  double sumsq = pk * pk;
  for (int k = 0; k < n - 1; ++k) {
    const double pk1 =
        t * std::sqrt(2.0 / (k + 1)) * pk - std::sqrt(double(k) / (k + 1)) * pkm1;
    pkm1 = pk;
    pk = pk1;
    sumsq += pk * pk;
  }
  // loop leaves pk = p_{n-1}; advance one more step for p_n
  const int k = n - 1;
  const double pn =
      t * std::sqrt(2.0 / (k + 1)) * pk - std::sqrt(double(k) / (k + 1)) * pkm1;
  return {pn, pk, sumsq};
}

// Number of eigenvalues of the Jacobi matrix (zero diagonal, off-diagonal
// b_k = sqrt(k/2)) strictly below x, via the Sturm/LDL recursion.
int count_below(int n, double x) {
  int count = 0;
  double q = -x;
  if (q < 0.0) ++count;
  for (int k = 1; k < n; ++k) {
    const double b2 = 0.5 * k;  // b_k^2
    if (q == 0.0) q = -1e-300;
    q = -x - b2 / q;
    if (q < 0.0) ++count;
  }
  return count;
}

std::unique_ptr<HermiteRule> build_rule(int n) {
  auto rule = std::make_unique<HermiteRule>();
  rule->nodes.resize(n);
  rule->weights.resize(n);
  rule->total_weights.resize(n);

  // Gershgorin bound on the spectrum.
  const double bound = 2.0 * std::sqrt(0.5 * (n - 1)) + 1.0;

  // Only the non-negative half is computed; the rest follows by symmetry.
  for (int i = (n + 1) / 2; i < n; ++i) {
    double lo = 0.0, hi = bound;
    for (int iter = 0; iter < 200 && (hi - lo) > 1e-15 * (1.0 + hi); ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (count_below(n, mid) <= i) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    double t = 0.5 * (lo + hi);
    for (int iter = 0; iter < 4; ++iter) {  // Newton polish
      const RecurrenceState s = eval_orthonormal(n, t);
      const double deriv = std::sqrt(2.0 * n) * s.pnm1;
      if (deriv == 0.0) break;
      t -= s.pn / deriv;
    }
    rule->nodes[i] = t;
    rule->nodes[n - 1 - i] = -t;
  }
  if (n % 2 == 1) rule->nodes[n / 2] = 0.0;

  double wsum = 0.0;
  for (int i = 0; i < n; ++i) {
    const RecurrenceState s = eval_orthonormal(n, rule->nodes[i]);
    const double w = 1.0 / s.sumsq;
    rule->weights[i] = w;
    rule->total_weights[i] = w * std::exp(rule->nodes[i] * rule->nodes[i]);
    wsum += w;
  }
  if (std::abs(wsum - kSqrtPi) > 1e-12) {
    throw QuadratureError("hermite_rule: weights for order " + std::to_string(n) +
                          " failed to converge (sum " + std::to_string(wsum) + ")");
  }
  return rule;
}

struct Segment {
  double a, b;
  double fa, fm, fb;
  double simpson;
  double tol;
  int depth;
};

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol, double rel_tol,
                        int max_depth) {
  auto eval = [&](double y) {
    const double v = f(y);
    if (!std::isfinite(v)) {
      throw QuadratureError("integrate_density_functional: non-finite value at y = " +
                            std::to_string(y));
    }
    return v;
  };

  const double m0 = 0.5 * (a + b);
  const double fa = eval(a), fm = eval(m0), fb = eval(b);
  const double s0 = simpson(fa, fm, fb, b - a);
  const double tol0 = std::max(abs_tol, rel_tol * std::abs(s0));

  std::vector<Segment> stack;
  stack.push_back({a, b, fa, fm, fb, s0, tol0, 0});
  double result = 0.0;

  while (!stack.empty()) {
    const Segment seg = stack.back();
    stack.pop_back();
    const double m = 0.5 * (seg.a + seg.b);
    const double lm = 0.5 * (seg.a + m);
    const double rm = 0.5 * (m + seg.b);
    const double flm = eval(lm), frm = eval(rm);
    const double sl = simpson(seg.fa, flm, seg.fm, m - seg.a);
    const double sr = simpson(seg.fm, frm, seg.fb, seg.b - m);
    const double err = (sl + sr - seg.simpson) / 15.0;
    if (std::abs(err) <= seg.tol || (seg.b - seg.a) < 1e-14 * (1.0 + std::abs(m))) {
      result += sl + sr + err;
      continue;
    }
    if (seg.depth >= max_depth) {
      double partial = result + sl + sr;
      for (const Segment& rest : stack) partial += rest.simpson;
      throw QuadratureError(
          "integrate_density_functional: subdivision limit " +
              std::to_string(max_depth) + " exceeded on [" +
              std::to_string(seg.a) + ", " + std::to_string(seg.b) + "]",
          partial);
    }
    stack.push_back({seg.a, m, seg.fa, flm, seg.fm, sl, 0.5 * seg.tol, seg.depth + 1});
    stack.push_back({m, seg.b, seg.fm, frm, seg.fb, sr, 0.5 * seg.tol, seg.depth + 1});
  }
  return result;
}

}  // namespace

QuadratureSpec QuadratureSpec::hermite(int order) {
  QuadratureSpec spec;
  spec.method = QuadratureMethod::hermite_gaussian;
  spec.order = order;
  spec.validate();
  return spec;
}

QuadratureSpec QuadratureSpec::adaptive(double abs_tol, double rel_tol,
                                        int max_subdivisions) {
  QuadratureSpec spec;
  spec.method = QuadratureMethod::adaptive_interval;
  spec.abs_tol = abs_tol;
  spec.rel_tol = rel_tol;
  spec.max_subdivisions = max_subdivisions;
  spec.validate();
  return spec;
}

void QuadratureSpec::validate() const {
  if (method == QuadratureMethod::hermite_gaussian) {
    if (order < 2) {
      throw std::invalid_argument("QuadratureSpec: hermite order must be >= 2");
    }
    if (order > kMaxHermiteOrder) {
      throw std::invalid_argument("QuadratureSpec: hermite order " +
                                  std::to_string(order) + " exceeds maximum " +
                                  std::to_string(kMaxHermiteOrder));
    }
  } else {
    if (abs_tol < 0.0 || rel_tol < 0.0 || (abs_tol == 0.0 && rel_tol == 0.0)) {
      throw std::invalid_argument(
          "QuadratureSpec: adaptive method needs abs_tol or rel_tol > 0");
    }
    if (max_subdivisions < 1) {
      throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
    }
  }
}

const HermiteRule& hermite_rule(int order) {
  if (order < 2) {
    throw std::invalid_argument("hermite_rule: order must be >= 2");
  }
  if (order > kMaxHermiteOrder) {
    throw std::invalid_argument("hermite_rule: order " + std::to_string(order) +
                                " exceeds maximum " +
                                std::to_string(kMaxHermiteOrder));
  }
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const HermiteRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) {
    it = cache.emplace(order, build_rule(order)).first;
  }
  return *it->second;
}

double integrate_density_functional(const std::function<double(double)>& f,
                                    const QuadratureSpec& spec,
                                    const AffineMap& map) {
  spec.validate();
  if (!(map.scale > 0.0) || !std::isfinite(map.scale) || !std::isfinite(map.shift)) {
    throw std::invalid_argument("integrate_density_functional: map.scale must be finite and > 0");
  }
  if (spec.method == QuadratureMethod::hermite_gaussian) {
    const HermiteRule& rule = hermite_rule(spec.order);
    double acc = 0.0;
    for (int i = 0; i < rule.order(); ++i) {
      const double y = map.shift + map.scale * rule.nodes[i];
      const double v = f(y);
      if (!std::isfinite(v)) {
        throw QuadratureError(
            "integrate_density_functional: non-finite value at node " +
            std::to_string(i) + " (t = " + std::to_string(rule.nodes[i]) +
            ", y = " + std::to_string(y) + ")");
      }
      acc += rule.total_weights[i] * v;
    }
    return map.scale * acc;
  }
  const double half = kAdaptiveTruncationRadius * map.scale;
  return adaptive_simpson(f, map.shift - half, map.shift + half, spec.abs_tol,
                          spec.rel_tol, spec.max_subdivisions);
}

}  // namespace cbpsk
