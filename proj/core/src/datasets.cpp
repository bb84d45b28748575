#include "cbpsk/datasets.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "cbpsk/analysis.hpp"
#include "cbpsk/cocktail.hpp"
#include "cbpsk/modulation.hpp"

namespace cbpsk {

namespace {

constexpr std::string_view kNames[] = {"fig1",  "fig2a", "fig2b", "fig3a",
                                       "fig3b", "fig4",  "sweep", "verify"};

std::string ratio_suffix(double r) { return "_ratio_" + format_double(r); }

std::string join_doubles(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += format_double(v[i]);
  }
  return s;
}

void common_metadata(Table& t, const RunConfig& cfg, const GridSpec* g,
                     bool axis_db) {
  t.metadata.emplace_back("tool", "cbpsk");
  t.metadata.emplace_back("version", std::string(kToolVersion));
  t.metadata.emplace_back("command", std::string(command_name(cfg.command)));
  if (g) {
    t.metadata.emplace_back("snr_axis",
                            axis_db ? "eb_over_n0_db" : "es_over_n0_linear");
    t.metadata.emplace_back("snr_min", format_double(g->min));
    t.metadata.emplace_back("snr_max", format_double(g->max));
    t.metadata.emplace_back("snr_points", std::to_string(g->points));
    t.metadata.emplace_back("snr_spacing", g->geometric ? "geometric" : "linear");
  }
  t.metadata.emplace_back("ratios", join_doubles(cfg.ratios));
  t.metadata.emplace_back("quad_order", std::to_string(cfg.quad_order));
  t.metadata.emplace_back("mc_samples", std::to_string(cfg.mc_samples));
  t.metadata.emplace_back("seed", std::to_string(cfg.seed));
  t.metadata.emplace_back("snr_definition",
                          "mean symbol energy / total noise power");
  t.metadata.emplace_back(
      "noise_model",
      "circularly symmetric complex AWGN, per-dimension variance sigma2/2");
  t.metadata.emplace_back("eb_over_n0_db", "10*log10(snr_linear/rate)");
  t.metadata.emplace_back("rate_unit", "bits per symbol");
}

// Solves s/rate(s) = 10^(eb_db/10) for s and returns rate(s); s/rate(s) is
// increasing with infimum 1/log2(e) as s -> 0, so targets at or below that
// have no solution and the scheme contributes rate 0 at that abscissa.
// s_hint warm-starts the lower bracket across an ascending Eb/N0 grid.
double rate_at_eb_db(const std::function<double(double)>& rate_fn, double eb_db,
                     double& s_hint) {
  const double target = std::pow(10.0, eb_db / 10.0);
  auto eb_of = [&](double s) {
    const double r = rate_fn(s);
    return r > 0.0 ? s / r : std::numeric_limits<double>::infinity();
  };
  double a = s_hint > 1e-6 ? s_hint : 1e-6;
  double ga = eb_of(a) - target;
  if (ga > 0.0 && a > 1e-6) {  // stale hint from a different target sequence
    a = 1e-6;
    ga = eb_of(a) - target;
  }
  if (ga >= 0.0) return 0.0;
  double b = std::max(2.0 * a, 1.0);
  double gb = eb_of(b) - target;
  int doublings = 0;
  while (gb < 0.0) {
    b *= 2.0;
    if (++doublings > 60) {
      throw QuadratureError("rate_at_eb_db: no upper bracket below s = 2^60");
    }
    gb = eb_of(b) - target;
  }
  // Illinois-damped regula falsi; ~10 rate evaluations per target.
  int side = 0;
  for (int iter = 0; iter < 200 && b - a > 1e-10 * (1.0 + b); ++iter) {
    double s = (a * gb - b * ga) / (gb - ga);
    if (!(s > a) || !(s < b)) s = 0.5 * (a + b);
    const double gs = eb_of(s) - target;
    if (gs > 0.0) {
      b = s;
      gb = gs;
      if (side == -1) ga *= 0.5;
      side = -1;
    } else if (gs < 0.0) {
      a = s;
      ga = gs;
      if (side == +1) gb *= 0.5;
      side = +1;
    } else {
      a = b = s;
      break;
    }
  }
  s_hint = 0.5 * (a + b);
  return rate_fn(s_hint);
}

Table build_fig1(const RunConfig& cfg, const GridSpec& g) {
  const QuadratureSpec quad = QuadratureSpec::hermite(cfg.quad_order);
  Table t;
  common_metadata(t, cfg, &g, true);
  t.metadata.emplace_back("constellation_energy", "1 (all schemes)");
  t.columns = {"snr_db_eb_n0", "capacity", "bpsk", "qpsk", "psk8", "ask4"};

  struct Scheme {
    std::function<double(double)> rate;
    double hint = 0.0;
  };
  auto constrained = [&quad](Constellation c) {
    return [&quad, c = std::move(c)](double s) {
      return mutual_information(c, AwgnSpec(c.mean_energy() / s, c.dimensionality()),
                                quad);
    };
  };
  std::array<Scheme, 5> schemes{{
      {[](double s) { return capacity(s); }, 0.0},
      {[&quad](double s) { return mi_bpsk(s, quad); }, 0.0},
      {constrained(Constellation::qpsk()), 0.0},
      {constrained(Constellation::psk8()), 0.0},
      {constrained(Constellation::ask4()), 0.0},
  }};
  for (double db : make_grid(g)) {
    std::vector<double> row{db};
    for (auto& sch : schemes) {
      row.push_back(rate_at_eb_db(sch.rate, db, sch.hint));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table build_fig2(const RunConfig& cfg, const GridSpec& g, bool with_eb_axis) {
  const QuadratureSpec quad = QuadratureSpec::hermite(cfg.quad_order);
  Table t;
  common_metadata(t, cfg, &g, false);
  t.columns = {"snr_linear"};
  for (double r : cfg.ratios) {
    if (with_eb_axis) t.columns.push_back("eb_n0_db" + ratio_suffix(r));
    t.columns.push_back("r1" + ratio_suffix(r));
    t.columns.push_back("r2" + ratio_suffix(r));
    t.columns.push_back("r_sum" + ratio_suffix(r));
  }
  if (with_eb_axis) t.columns.push_back("eb_n0_db_capacity");
  t.columns.push_back("capacity");

  for (double s : make_grid(g)) {
    std::vector<double> row{s};
    for (double r : cfg.ratios) {
      const CocktailParams p = params_for_ratio(s, r, 1.0);
      const double a1 = adr_x1(p, quad);
      const double a2 = adr_x2(p, quad);
      if (with_eb_axis) row.push_back(eb_over_n0_db(p, a1 + a2));
      row.push_back(a1);
      row.push_back(a2);
      row.push_back(a1 + a2);
    }
    const double c = capacity(s);
    if (with_eb_axis) row.push_back(10.0 * std::log10(s / c));
    row.push_back(c);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table build_fig3(const RunConfig& cfg, const GridSpec& g, bool with_eb_axis) {
  const QuadratureSpec quad = QuadratureSpec::hermite(cfg.quad_order);
  Table t;
  common_metadata(t, cfg, &g, false);
  t.metadata.emplace_back("delta_r", "adr_sum - log2(1 + snr_linear)");
  t.columns = {"snr_linear"};
  for (double r : cfg.ratios) {
    if (with_eb_axis) t.columns.push_back("eb_n0_db" + ratio_suffix(r));
    t.columns.push_back("delta_r" + ratio_suffix(r));
  }
  for (double s : make_grid(g)) {
    std::vector<double> row{s};
    for (double r : cfg.ratios) {
      const CocktailParams p = params_for_ratio(s, r, 1.0);
      const double sum = adr_sum(p, quad);
      if (with_eb_axis) row.push_back(eb_over_n0_db(p, sum));
      row.push_back(sum - capacity(s));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table build_fig4(const RunConfig& cfg, const GridSpec& g) {
  const QuadratureSpec quad = QuadratureSpec::hermite(cfg.quad_order);
  Table t;
  common_metadata(t, cfg, &g, false);
  t.metadata.emplace_back("derivative_limit_extrapolated",
                          format_double(derivative_limit_at_zero(quad)));
  t.metadata.emplace_back("derivative_limit_exact",
                          "log2(e) = 1.4426950408889634");
  t.columns = {"gamma", "mi_bpsk", "derivative"};
  for (double s : make_grid(g)) {
    t.rows.push_back({s, mi_bpsk(s, quad), mi_bpsk_derivative(s, quad)});
  }
  return t;
}

Table build_sweep(const RunConfig& cfg, const GridSpec& g) {
  const QuadratureSpec quad = QuadratureSpec::hermite(cfg.quad_order);
  Table t;
  common_metadata(t, cfg, &g, false);
  t.columns = {"snr_linear", "capacity", "bpsk_conventional"};
  for (double r : cfg.ratios) {
    t.columns.push_back("r1" + ratio_suffix(r));
    t.columns.push_back("r2" + ratio_suffix(r));
    t.columns.push_back("r_sum" + ratio_suffix(r));
    t.columns.push_back("delta_capacity" + ratio_suffix(r));
    t.columns.push_back("delta_conventional" + ratio_suffix(r));
  }
  for (double s : make_grid(g)) {
    const double cap = capacity(s);
    const double conv = mi_bpsk(s, quad);
    std::vector<double> row{s, cap, conv};
    for (double r : cfg.ratios) {
      const CocktailParams p = params_for_ratio(s, r, 1.0);
      const double a1 = adr_x1(p, quad);
      const double a2 = adr_x2(p, quad);
      row.push_back(a1);
      row.push_back(a2);
      row.push_back(a1 + a2);
      row.push_back(a1 + a2 - cap);
      row.push_back(a1 + a2 - conv);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

std::string_view command_name(Command cmd) {
  return kNames[static_cast<int>(cmd)];
}

std::optional<Command> parse_command(std::string_view name) {
  for (int i = 0; i < 8; ++i) {
    if (kNames[i] == name) return static_cast<Command>(i);
  }
  return std::nullopt;
}

std::vector<double> make_grid(const GridSpec& g) {
  if (g.points < 2) {
    throw std::invalid_argument("grid: need at least 2 points");
  }
  if (!std::isfinite(g.min) || !std::isfinite(g.max) || !(g.min < g.max)) {
    throw std::invalid_argument("grid: need finite min < max");
  }
  if (g.geometric && !(g.min > 0.0)) {
    throw std::invalid_argument("grid: geometric spacing needs min > 0");
  }
  std::vector<double> out(static_cast<std::size_t>(g.points));
  const double n1 = static_cast<double>(g.points - 1);
  if (g.geometric) {
    const double la = std::log(g.min), lb = std::log(g.max);
    for (int i = 0; i < g.points; ++i) {
      out[static_cast<std::size_t>(i)] = std::exp(la + (lb - la) * i / n1);
    }
  } else {
    for (int i = 0; i < g.points; ++i) {
      out[static_cast<std::size_t>(i)] = g.min + (g.max - g.min) * i / n1;
    }
  }
  out.front() = g.min;
  out.back() = g.max;
  return out;
}

GridSpec default_grid(Command cmd) {
  switch (cmd) {
    case Command::fig1:
      return {0.0, 12.0, 25, false};  // Eb/N0 dB
    case Command::fig2a:
      return {0.05, 4.0, 40, false};
    case Command::fig2b:
      return {0.05, 1e4, 45, true};
    case Command::fig3a:
      return {0.01, 1.5, 50, false};
    case Command::fig3b:
      return {0.005, 100.0, 60, true};
    case Command::fig4:
      return {1e-3, 100.0, 41, true};
    case Command::sweep:
      return {0.01, 100.0, 40, true};
    case Command::verify:
      break;
  }
  throw std::invalid_argument("verify takes no SNR grid");
}

GridSpec resolved_grid(const RunConfig& cfg) {
  GridSpec g = default_grid(cfg.command);  // throws for verify
  if (cfg.snr_min) g.min = *cfg.snr_min;
  if (cfg.snr_max) g.max = *cfg.snr_max;
  if (cfg.snr_points) g.points = *cfg.snr_points;
  if (g.points < 2) {
    throw std::invalid_argument("snr_points must be >= 2");
  }
  if (!std::isfinite(g.min) || !std::isfinite(g.max) || !(g.min < g.max)) {
    throw std::invalid_argument("need finite snr_min < snr_max");
  }
  // Every command except fig1 works on a linear SNR axis that the cocktail
  // parameterization needs to be strictly positive.
  if (cfg.command != Command::fig1 && !(g.min > 0.0)) {
    throw std::invalid_argument("snr_min must be > 0 for this command");
  }
  return g;
}

void RunConfig::validate() const {
  if (ratios.empty()) {
    throw std::invalid_argument("at least one ratio is required");
  }
  for (double r : ratios) {
    if (!std::isfinite(r) || !(r > 0.0) || !(r < 1.0)) {
      throw std::invalid_argument("ratios must lie strictly inside (0, 1)");
    }
  }
  QuadratureSpec::hermite(quad_order).validate();
  if (command == Command::verify && mc_samples < 10000) {
    throw std::invalid_argument("mc_samples must be >= 10000");
  }
  if (command != Command::verify) {
    (void)resolved_grid(*this);
  }
}

Table build_dataset(const RunConfig& cfg) {
  cfg.validate();
  const GridSpec g = resolved_grid(cfg);
  switch (cfg.command) {
    case Command::fig1:
      return build_fig1(cfg, g);
    case Command::fig2a:
      return build_fig2(cfg, g, false);
    case Command::fig2b:
      return build_fig2(cfg, g, true);
    case Command::fig3a:
      return build_fig3(cfg, g, false);
    case Command::fig3b:
      return build_fig3(cfg, g, true);
    case Command::fig4:
      return build_fig4(cfg, g);
    case Command::sweep:
      return build_sweep(cfg, g);
    case Command::verify:
      break;
  }
  throw std::invalid_argument("build_dataset: verify is not a dataset command");
}

std::string output_path(const RunConfig& cfg) {
  return cfg.out.empty() ? std::string(command_name(cfg.command)) + ".csv"
                         : cfg.out;
}

}  // namespace cbpsk
