#include "cbpsk/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "cbpsk/analysis.hpp"
#include "cbpsk/cocktail.hpp"
#include "cbpsk/modulation.hpp"
#include "cbpsk/montecarlo.hpp"

namespace cbpsk {

namespace {

std::string kv(const char* key, double value) {
  return std::string(key) + "=" + format_double(value);
}

CriterionResult check_derivative_limit(const QuadratureSpec& quad) {
  const double limit = derivative_limit_at_zero(quad);
  const double err = std::abs(limit - std::numbers::log2e);
  return {1, "derivative_limit_log2e", err <= 1e-3,
          kv("limit", limit) + " " + kv("abs_err", err) + " tol=0.001"};
}

CriterionResult check_low_snr_excess(const QuadratureSpec& quad) {
  bool ok = true;
  std::string detail;
  for (double r : {0.3, 0.9}) {
    const CocktailParams p = params_for_ratio(1e-3, r, 1.0);
    const double ratio = delta_vs_capacity(p, quad) / low_snr_delta_approx(p);
    ok = ok && ratio >= 0.95 && ratio <= 1.05;
    if (!detail.empty()) detail += ' ';
    detail += "excess_ratio[" + format_double(r) + "]=" + format_double(ratio);
  }
  return {2, "low_snr_excess_expansion", ok, detail + " window=[0.95 1.05]"};
}

CriterionResult check_sign_pattern(const QuadratureSpec& quad) {
  const double low = delta_vs_capacity(params_for_ratio(0.01, 0.9, 1.0), quad);
  const double high = delta_vs_capacity(params_for_ratio(100.0, 0.9, 1.0), quad);
  return {3, "delta_sign_pattern", low > 0.0 && high < 0.0,
          kv("delta_at_0.01", low) + " " + kv("delta_at_100", high)};
}

CriterionResult check_saturation(const QuadratureSpec& quad) {
  const double adr_r3 = adr_sum(params_for_ratio(1e4, 0.3, 1.0), quad);
  const double adr_r9 = adr_sum(params_for_ratio(1e4, 0.9, 1.0), quad);
  const double two_point = mi_bpsk(1e4, quad);
  auto constrained_at = [&](const Constellation& c, double s) {
    return mutual_information(c, AwgnSpec(c.mean_energy() / s, c.dimensionality()),
                              quad);
  };
  const double qpsk = constrained_at(Constellation::qpsk(), 1e4);
  const double psk8 = constrained_at(Constellation::psk8(), 1e4);
  const double ask4 = constrained_at(Constellation::ask4(), 1e4);
  const bool ok = std::abs(adr_r3 - 2.0) <= 1e-3 && std::abs(adr_r9 - 2.0) <= 1e-3 &&
                  std::abs(two_point - 1.0) <= 1e-6 &&
                  std::abs(qpsk - 2.0) <= 1e-3 && std::abs(psk8 - 3.0) <= 1e-3 &&
                  std::abs(ask4 - 2.0) <= 1e-3;
  return {4, "high_snr_saturation", ok,
          kv("adr_sum[0.3]", adr_r3) + " " + kv("adr_sum[0.9]", adr_r9) + " " +
              kv("bpsk", two_point) + " " + kv("qpsk", qpsk) + " " +
              kv("psk8", psk8) + " " + kv("ask4", ask4)};
}

CriterionResult check_mc_agreement(const QuadratureSpec& quad,
                                   const RunConfig& cfg) {
  struct PairSpec {
    std::string label;
    Constellation c;
    double snr;
  };
  // Four single-layer schemes at two SNRs each, plus the three per-stage
  // SNRs of the (alpha=1, beta=0.9, sigma2=1) layered operating point.
  std::vector<PairSpec> pairs;
  pairs.push_back({"bpsk@0.25", Constellation::bpsk(1.0), 0.25});
  pairs.push_back({"bpsk@1", Constellation::bpsk(1.0), 1.0});
  pairs.push_back({"qpsk@1", Constellation::qpsk(), 1.0});
  pairs.push_back({"qpsk@5", Constellation::qpsk(), 5.0});
  pairs.push_back({"psk8@1", Constellation::psk8(), 1.0});
  pairs.push_back({"psk8@10", Constellation::psk8(), 10.0});
  pairs.push_back({"ask4@1", Constellation::ask4(), 1.0});
  pairs.push_back({"ask4@10", Constellation::ask4(), 10.0});
  pairs.push_back({"gamma1@3.61", Constellation::bpsk(1.0), 3.61});
  pairs.push_back({"gamma2@0.01", Constellation::bpsk(1.0), 0.01});
  pairs.push_back({"gamma3@0.81", Constellation::bpsk(1.0), 0.81});

  bool ok = true;
  std::string detail;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const PairSpec& ps = pairs[i];
    const AwgnSpec noise(ps.c.mean_energy() / ps.snr, ps.c.dimensionality());
    const double mi = mutual_information(ps.c, noise, quad);
    const MiEstimate est = simulate_mi(ps.c, noise, cfg.mc_samples,
                                       cfg.seed + static_cast<std::uint64_t>(i));
    const double z = std::abs(mi - est.mean) / est.std_error;
    ok = ok && z <= 3.0;
    if (!detail.empty()) detail += ' ';
    detail += "z[" + ps.label + "]=" + format_double(z);
  }
  return {5, "mc_quadrature_agreement", ok, detail + " limit=3"};
}

CriterionResult check_capacity_bound(const QuadratureSpec& quad) {
  const auto grid = make_grid({1e-3, 100.0, 50, true});
  double worst = -1.0;
  for (double s : grid) {
    worst = std::max(worst, mi_bpsk(s, quad) - capacity(s));
  }
  return {6, "capacity_bound", worst <= 1e-9,
          kv("max_excess", worst) + " slack=1e-09"};
}

CriterionResult check_internal_consistency(const QuadratureSpec& quad) {
  const Constellation bpsk = Constellation::bpsk(1.0);
  const auto grid = make_grid({1e-3, 100.0, 50, true});
  double max_rate_diff = 0.0;
  for (double s : grid) {
    const double direct = mutual_information(bpsk, AwgnSpec(1.0 / s, bpsk.dimensionality()), quad);
    max_rate_diff = std::max(max_rate_diff, std::abs(direct - mi_bpsk(s, quad)));
  }
  double worst_ratio = 0.0;
  for (double s : {1e-2, 0.1, 1.0, 10.0, 100.0}) {
    const DerivativeReport rep = derivative_report(s, quad);
    const double tol = std::max(1e-4, 1e-3 * std::abs(rep.analytic_value));
    worst_ratio = std::max(
        worst_ratio, std::abs(rep.analytic_value - rep.finite_diff_value) / tol);
  }
  const bool ok = max_rate_diff <= 1e-6 && worst_ratio <= 1.0;
  return {7, "internal_consistency", ok,
          kv("max_rate_diff", max_rate_diff) + " rate_tol=1e-06 " +
              kv("deriv_mismatch_over_tol", worst_ratio)};
}

CriterionResult check_sic(const RunConfig& cfg) {
  const CocktailParams p(1.0, 0.5, 1.0);
  const std::uint64_t n =
      std::max<std::uint64_t>(kMcMinSamples, cfg.mc_samples / 10);
  const SicResult sic = simulate_cocktail_sic(p, n, cfg.seed + 100);
  const double sd = std::sqrt(p.sigma2);
  const double expected = 0.5 * q_function((p.alpha + p.beta) / sd) +
                          0.5 * q_function((p.alpha - p.beta) / sd);
  const double se = std::sqrt(expected * (1.0 - expected) / static_cast<double>(n));
  const double z1 = std::abs(sic.ber_x1 - expected) / se;
  const double half = 0.5 * static_cast<double>(n);
  const double z_balance =
      std::abs(static_cast<double>(sic.case_counts[0]) - half) /
      std::sqrt(0.25 * static_cast<double>(n));
  const bool ok = z1 <= 3.0 && z_balance <= 5.0;
  return {8, "sic_analytics", ok,
          kv("ber1", sic.ber_x1) + " " + kv("expected", expected) + " " +
              kv("z", z1) + " " + kv("case_balance_z", z_balance)};
}

CriterionResult check_determinism(const RunConfig& cfg) {
  RunConfig small;
  small.command = Command::sweep;
  small.snr_points = 5;
  small.quad_order = cfg.quad_order;
  const std::string s1 = to_csv(build_dataset(small));
  const std::string s2 = to_csv(build_dataset(small));
  const Constellation bpsk = Constellation::bpsk(1.0);
  const AwgnSpec noise(1.0, Dimensionality::complex);
  const MiEstimate m1 = simulate_mi(bpsk, noise, kMcMinSamples, cfg.seed, 1);
  const MiEstimate m2 = simulate_mi(bpsk, noise, kMcMinSamples, cfg.seed, 2);
  const bool csv_ok = s1 == s2;
  const bool mc_ok = m1.mean == m2.mean && m1.std_error == m2.std_error;
  return {9, "determinism", csv_ok && mc_ok,
          std::string("csv_rerender=") + (csv_ok ? "identical" : "DIFFERS") +
              " mc_thread_invariance=" + (mc_ok ? "identical" : "DIFFERS") +
              " bytes=" + std::to_string(s1.size())};
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](const CriterionResult& c) { return c.pass; });
}

VerificationReport run_verification(const RunConfig& cfg) {
  RunConfig local = cfg;
  local.command = Command::verify;
  local.validate();
  const QuadratureSpec quad = QuadratureSpec::hermite(local.quad_order);

  VerificationReport rep;
  rep.criteria.push_back(check_derivative_limit(quad));
  rep.criteria.push_back(check_low_snr_excess(quad));
  rep.criteria.push_back(check_sign_pattern(quad));
  rep.criteria.push_back(check_saturation(quad));
  rep.criteria.push_back(check_mc_agreement(quad, local));
  rep.criteria.push_back(check_capacity_bound(quad));
  rep.criteria.push_back(check_internal_consistency(quad));
  rep.criteria.push_back(check_sic(local));
  rep.criteria.push_back(check_determinism(local));
  return rep;
}

std::string verification_csv(const VerificationReport& rep,
                             const RunConfig& cfg) {
  std::string out;
  out += "# tool = cbpsk\n";
  out += "# version = " + std::string(kToolVersion) + "\n";
  out += "# command = verify\n";
  out += "# quad_order = " + std::to_string(cfg.quad_order) + "\n";
  out += "# mc_samples = " + std::to_string(cfg.mc_samples) + "\n";
  out += "# seed = " + std::to_string(cfg.seed) + "\n";
  out += "# snr_definition = mean symbol energy / total noise power\n";
  out +=
      "# noise_model = circularly symmetric complex AWGN, per-dimension "
      "variance sigma2/2\n";
  out += "index,name,pass,detail\n";
  for (const CriterionResult& c : rep.criteria) {
    out += std::to_string(c.index);
    out += ',';
    out += c.name;
    out += ',';
    out += c.pass ? '1' : '0';
    out += ',';
    out += c.detail;
    out += '\n';
  }
  return out;
}

}  // namespace cbpsk
