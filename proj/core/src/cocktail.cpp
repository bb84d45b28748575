#include "cbpsk/cocktail.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cbpsk {

CocktailParams::CocktailParams(double alpha_in, double beta_in, double sigma2_in)
    : alpha(alpha_in), beta(beta_in), sigma2(sigma2_in) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(sigma2)) {
    throw std::invalid_argument("CocktailParams: non-finite parameter");
  }
  if (!(beta > 0.0) || !(alpha > beta)) {
    throw std::invalid_argument("CocktailParams: require alpha > beta > 0");
  }
  if (!(sigma2 > 0.0)) {
    throw std::invalid_argument("CocktailParams: require sigma2 > 0");
  }
}

GammaSet gamma_set(const CocktailParams& p) {
  const double sum = p.alpha + p.beta;
  const double diff = p.alpha - p.beta;
  return {sum * sum / p.sigma2, diff * diff / p.sigma2,
          p.beta * p.beta / p.sigma2, 0.5};
}

EnergyAccount energy_account(const CocktailParams& p) {
  const double e_in = p.input_energy();
  const double e2 = p.beta * p.beta;
  return {e_in, e_in, e2, e_in + e2};
}

double adr_x1(const CocktailParams& p, const QuadratureSpec& quad) {
  const GammaSet g = gamma_set(p);
  return 0.5 * (mi_bpsk(g.gamma1, quad) + mi_bpsk(g.gamma2, quad));
}

double adr_x2(const CocktailParams& p, const QuadratureSpec& quad) {
  return mi_bpsk(gamma_set(p).gamma3, quad);
}

double adr_sum(const CocktailParams& p, const QuadratureSpec& quad) {
  return adr_x1(p, quad) + adr_x2(p, quad);
}

double delta_vs_capacity(const CocktailParams& p, const QuadratureSpec& quad) {
  return adr_sum(p, quad) - capacity(p.input_energy() / p.sigma2);
}

double delta_vs_conventional(const CocktailParams& p, const QuadratureSpec& quad) {
  return adr_sum(p, quad) - mi_bpsk(p.input_energy() / p.sigma2, quad);
}

double low_snr_delta_approx(const CocktailParams& p) {
  return std::numbers::log2e * p.beta * p.beta / p.sigma2;
}

double eb_over_n0_db(const CocktailParams& p, double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw std::invalid_argument("eb_over_n0_db: rate must be finite and > 0");
  }
  return 10.0 * std::log10(p.input_energy() / p.sigma2 / rate);
}

CocktailParams params_for_ratio(double e_in, double ratio, double sigma2) {
  if (!(e_in > 0.0) || !std::isfinite(e_in)) {
    throw std::invalid_argument("params_for_ratio: e_in must be > 0");
  }
  if (!(ratio > 0.0) || !(ratio < 1.0)) {
    throw std::invalid_argument("params_for_ratio: ratio must lie in (0, 1)");
  }
  const double alpha = std::sqrt(e_in / (1.0 + ratio * ratio));
  return CocktailParams(alpha, ratio * alpha, sigma2);
}

RatioOptimum optimize_beta_ratio(double e_in, double sigma2,
                                 const QuadratureSpec& quad) {
  if (!(e_in > 0.0) || !(sigma2 > 0.0)) {
    throw std::invalid_argument("optimize_beta_ratio: e_in and sigma2 must be > 0");
  }
  auto f = [&](double r) { return adr_sum(params_for_ratio(e_in, r, sigma2), quad); };

  constexpr double kInvPhi = 0.61803398874989484820;
  double a = 0.01, b = 0.99;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > 1e-4) {
    if (fc >= fd) {  // ties move left, toward the smaller ratio
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  const double r = 0.5 * (a + b);
  return {r, f(r)};
}

}  // namespace cbpsk
