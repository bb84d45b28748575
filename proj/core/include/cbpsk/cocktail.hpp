#pragma once

#include "cbpsk/modulation.hpp"
#include "cbpsk/quadrature.hpp"

namespace cbpsk {

/// Two-layer superposed binary signalling x = alpha*x1 + beta*x2 with
/// x1, x2 in {-1, +1} equiprobable and alpha > beta > 0, in noise of total
/// power sigma2.
struct CocktailParams {
  double alpha;
  double beta;
  double sigma2;

  CocktailParams(double alpha_in, double beta_in, double sigma2_in);
  double ratio() const { return beta / alpha; }
  double input_energy() const { return alpha * alpha + beta * beta; }
};

/// The three SNRs seen by the two detection stages.  The composite amplitude
/// is alpha+beta when x1 == x2 (case one, probability 1/2) and alpha-beta
/// otherwise.
struct GammaSet {
  double gamma1;  // (alpha+beta)^2 / sigma2
  double gamma2;  // (alpha-beta)^2 / sigma2
  double gamma3;  // beta^2 / sigma2
  double case_probability;  // 1/2
};

/// Energy bookkeeping: the transmitted energy is alpha^2 + beta^2, while the
/// per-stream decoding energies sum to alpha^2 + 2*beta^2 (the beta^2 term is
/// counted by both stages).  Exposed as data; no position is taken here.
struct EnergyAccount {
  double e_in;      // alpha^2 + beta^2
  double e_stage1;  // alpha^2 + beta^2
  double e_stage2;  // beta^2
  double e_total;   // e_stage1 + e_stage2
};

struct RatioOptimum {
  double ratio;  // beta/alpha
  double adr;    // adr_sum at that ratio
};

GammaSet gamma_set(const CocktailParams& p);
EnergyAccount energy_account(const CocktailParams& p);

/// Stage-one rate: the equal-prior average of the two-point rates at the two
/// composite amplitudes, (R(gamma1) + R(gamma2)) / 2.
double adr_x1(const CocktailParams& p,
              const QuadratureSpec& quad = QuadratureSpec::hermite());
/// Stage-two rate after removal of the first stream: R(gamma3).
double adr_x2(const CocktailParams& p,
              const QuadratureSpec& quad = QuadratureSpec::hermite());
double adr_sum(const CocktailParams& p,
               const QuadratureSpec& quad = QuadratureSpec::hermite());

/// adr_sum minus log2(1 + e_in/sigma2).
double delta_vs_capacity(const CocktailParams& p,
                         const QuadratureSpec& quad = QuadratureSpec::hermite());
/// adr_sum minus the single-layer two-point rate at the same input energy.
double delta_vs_conventional(const CocktailParams& p,
                             const QuadratureSpec& quad = QuadratureSpec::hermite());
/// Low-SNR expansion of delta_vs_capacity: log2(e) * beta^2 / sigma2.
double low_snr_delta_approx(const CocktailParams& p);

/// 10*log10((e_in/sigma2)/rate); rate must be > 0.
double eb_over_n0_db(const CocktailParams& p, double rate);

/// Params with the given input energy and amplitude ratio beta/alpha.
CocktailParams params_for_ratio(double e_in, double ratio, double sigma2);

/// Golden-section maximization of adr_sum over ratio in [0.01, 0.99] at fixed
/// input energy, to a ratio tolerance of 1e-4.  Deterministic; on a plateau
/// the search drifts to the smallest optimal ratio.
RatioOptimum optimize_beta_ratio(double e_in, double sigma2,
                                 const QuadratureSpec& quad = QuadratureSpec::hermite());

}  // namespace cbpsk
