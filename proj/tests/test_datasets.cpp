#include "cbpsk/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "cbpsk/csv.hpp"
#include "cbpsk/modulation.hpp"
#include "cbpsk/verification.hpp"
#include "doctest.h"

using namespace cbpsk;

namespace {

std::size_t column_index(const Table& t, const std::string& name) {
  const auto it = std::find(t.columns.begin(), t.columns.end(), name);
  REQUIRE(it != t.columns.end());
  return static_cast<std::size_t>(it - t.columns.begin());
}

bool has_metadata(const Table& t, const std::string& key) {
  for (const auto& kv : t.metadata)
    if (kv.first == key) return true;
  return false;
}

}  // namespace

TEST_CASE("doubles render in shortest round-trip form") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(-0.5) == "-0.5");
  CHECK(format_double(0.001) == "0.001");
  for (double v : {1.0 / 3.0, 0.30000000000000004, 1e-300, 6.02e23, -7.25}) {
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("csv layout is metadata block, header, then rows") {
  Table t;
  t.metadata = {{"tool", "cbpsk"}, {"command", "demo"}};
  t.columns = {"x", "y"};
  t.rows = {{1.0, 0.5}, {2.0, 0.25}};
  CHECK(to_csv(t) ==
        "# tool = cbpsk\n"
        "# command = demo\n"
        "x,y\n"
        "1,0.5\n"
        "2,0.25\n");

  t.rows.push_back({3.0});
  CHECK_THROWS_AS(to_csv(t), std::invalid_argument);
}

TEST_CASE("grids hit both endpoints exactly") {
  const std::vector<double> lin = make_grid({0.0, 12.0, 25, false});
  REQUIRE(lin.size() == 25);
  CHECK(lin.front() == 0.0);
  CHECK(lin.back() == 12.0);
  CHECK(std::abs(lin[1] - 0.5) < 1e-12);

  const std::vector<double> geo = make_grid({0.01, 100.0, 3, true});
  REQUIRE(geo.size() == 3);
  CHECK(geo.front() == 0.01);
  CHECK(geo.back() == 100.0);
  CHECK(std::abs(geo[1] - 1.0) < 1e-12);

  CHECK_THROWS_AS(make_grid({1.0, 2.0, 1, false}), std::invalid_argument);
  CHECK_THROWS_AS(make_grid({2.0, 1.0, 5, false}), std::invalid_argument);
  CHECK_THROWS_AS(make_grid({0.0, 1.0, 5, true}), std::invalid_argument);
}

TEST_CASE("command names round-trip") {
  for (Command c : {Command::fig1, Command::fig2a, Command::fig2b, Command::fig3a,
                    Command::fig3b, Command::fig4, Command::sweep, Command::verify}) {
    const auto parsed = parse_command(command_name(c));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == c);
  }
  CHECK_FALSE(parse_command("fig5").has_value());
}

TEST_CASE("config validation rejects out-of-domain values") {
  RunConfig cfg;
  cfg.command = Command::sweep;
  CHECK_NOTHROW(cfg.validate());

  RunConfig bad = cfg;
  bad.ratios = {};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.ratios = {1.0};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.ratios = {0.5, -0.1};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.quad_order = 1024;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.snr_points = 1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.snr_min = 2.0;
  bad.snr_max = 1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.snr_min = 0.0;  // geometric axis
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.command = Command::verify;
  bad.mc_samples = 100;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("per-command default grids") {
  CHECK(default_grid(Command::fig1).geometric == false);
  CHECK(default_grid(Command::fig1).min == 0.0);
  CHECK(default_grid(Command::fig2b).geometric == true);
  CHECK(default_grid(Command::fig3a).max == 1.5);
  CHECK(default_grid(Command::fig4).min == 1e-3);
  CHECK_THROWS_AS(default_grid(Command::verify), std::invalid_argument);

  RunConfig cfg;
  cfg.command = Command::sweep;
  cfg.snr_min = 0.5;
  cfg.snr_points = 7;
  const GridSpec g = resolved_grid(cfg);
  CHECK(g.min == 0.5);
  CHECK(g.points == 7);
  CHECK(g.max == default_grid(Command::sweep).max);
}

TEST_CASE("output path defaults to the command name") {
  RunConfig cfg;
  cfg.command = Command::fig3b;
  CHECK(output_path(cfg) == "fig3b.csv");
  cfg.out = "custom.csv";
  CHECK(output_path(cfg) == "custom.csv");
}

TEST_CASE("excess-rate dataset starts positive and has labelled columns") {
  RunConfig cfg;
  cfg.command = Command::fig3a;
  const Table t = build_dataset(cfg);
  CHECK(has_metadata(t, "delta_r"));
  const std::size_t snr = column_index(t, "snr_linear");
  const std::size_t d03 = column_index(t, "delta_r_ratio_0.3");
  const std::size_t d09 = column_index(t, "delta_r_ratio_0.9");
  REQUIRE(t.rows.size() == 50);
  CHECK(t.rows.front()[snr] == 0.01);
  CHECK(t.rows.front()[d03] > 0.0);
  CHECK(t.rows.front()[d09] > 0.0);
  // the stronger second layer keeps the larger excess at the low end
  CHECK(t.rows.front()[d09] > t.rows.front()[d03]);
}

TEST_CASE("wide-range excess dataset turns negative at high snr") {
  RunConfig cfg;
  cfg.command = Command::fig3b;
  cfg.snr_points = 13;
  const Table t = build_dataset(cfg);
  const std::size_t d09 = column_index(t, "delta_r_ratio_0.9");
  const std::size_t eb09 = column_index(t, "eb_n0_db_ratio_0.9");
  CHECK(t.rows.front()[d09] > 0.0);
  CHECK(t.rows.back()[d09] < 0.0);
  for (const auto& row : t.rows) CHECK(std::isfinite(row[eb09]));
}

TEST_CASE("derivative dataset reports the origin limit") {
  RunConfig cfg;
  cfg.command = Command::fig4;
  const Table t = build_dataset(cfg);
  CHECK(has_metadata(t, "derivative_limit_extrapolated"));
  const std::size_t g = column_index(t, "gamma");
  const std::size_t d = column_index(t, "derivative");
  REQUIRE(t.rows.size() == 41);
  CHECK(t.rows.front()[g] == 1e-3);
  CHECK(std::abs(t.rows.front()[d] - 1.4427) < 1e-2);
  // derivative falls off monotonically over the default axis
  for (std::size_t i = 0; i + 1 < t.rows.size(); ++i)
    CHECK(t.rows[i][d] > t.rows[i + 1][d]);
}

TEST_CASE("two-layer rate dataset splits into consistent columns") {
  RunConfig cfg;
  cfg.command = Command::fig2a;
  cfg.snr_points = 6;
  const Table t = build_dataset(cfg);
  const std::size_t snr = column_index(t, "snr_linear");
  const std::size_t r1 = column_index(t, "r1_ratio_0.3");
  const std::size_t r2 = column_index(t, "r2_ratio_0.3");
  const std::size_t rs = column_index(t, "r_sum_ratio_0.3");
  const std::size_t cap = column_index(t, "capacity");
  for (const auto& row : t.rows) {
    CHECK(row[rs] == row[r1] + row[r2]);
    CHECK(row[r1] >= 0.0);
    CHECK(row[r2] >= 0.0);
    CHECK(row[rs] < 2.0);
    CHECK(std::abs(std::log2(1.0 + row[snr]) - row[cap]) < 1e-14);
  }
}

TEST_CASE("energy-per-bit axis is recomputable from the rate columns") {
  RunConfig cfg;
  cfg.command = Command::fig2b;
  cfg.snr_points = 5;
  const Table t = build_dataset(cfg);
  const std::size_t snr = column_index(t, "snr_linear");
  const std::size_t rs = column_index(t, "r_sum_ratio_0.9");
  const std::size_t eb = column_index(t, "eb_n0_db_ratio_0.9");
  const std::size_t ebc = column_index(t, "eb_n0_db_capacity");
  const std::size_t cap = column_index(t, "capacity");
  for (const auto& row : t.rows) {
    CHECK(std::abs(row[eb] - 10.0 * std::log10(row[snr] / row[rs])) < 1e-9);
    CHECK(std::abs(row[ebc] - 10.0 * std::log10(row[snr] / row[cap])) < 1e-9);
  }
}

TEST_CASE("comparison sweep carries its deltas consistently") {
  RunConfig cfg;
  cfg.command = Command::sweep;
  cfg.snr_points = 7;
  cfg.ratios = {0.5};
  const Table t = build_dataset(cfg);
  const std::size_t cap = column_index(t, "capacity");
  const std::size_t conv = column_index(t, "bpsk_conventional");
  const std::size_t rs = column_index(t, "r_sum_ratio_0.5");
  const std::size_t dc = column_index(t, "delta_capacity_ratio_0.5");
  const std::size_t dv = column_index(t, "delta_conventional_ratio_0.5");
  for (const auto& row : t.rows) {
    CHECK(row[dc] == row[rs] - row[cap]);
    CHECK(row[dv] == row[rs] - row[conv]);
    // two layers at the same input energy never lose to one
    CHECK(row[dv] > 0.0);
  }
}

TEST_CASE("constant-energy-per-bit dataset solves all schemes") {
  RunConfig cfg;
  cfg.command = Command::fig1;
  cfg.snr_min = 8.0;
  cfg.snr_max = 10.0;
  cfg.snr_points = 3;
  const Table t = build_dataset(cfg);
  CHECK(t.columns == std::vector<std::string>{"snr_db_eb_n0", "capacity", "bpsk",
                                              "qpsk", "psk8", "ask4"});
  REQUIRE(t.rows.size() == 3);
  for (const auto& row : t.rows) {
    for (std::size_t j = 1; j < row.size(); ++j) CHECK(row[j] > 0.0);
    // capacity dominates every constrained scheme at equal energy per bit
    for (std::size_t j = 2; j < row.size(); ++j) CHECK(row[1] > row[j]);
    CHECK(row[2] <= 1.0);         // two-point alphabet
    CHECK(row[3] <= 2.0 + 1e-9);  // qpsk
    CHECK(row[4] <= 3.0 + 1e-9);  // 8-psk
    CHECK(row[5] <= 2.0 + 1e-9);  // 4-ask
  }
  // at 10 dB per bit the two-point scheme is essentially saturated
  CHECK(t.rows.back()[2] > 0.99);
  // rates are non-decreasing in available energy per bit
  for (std::size_t j = 1; j < t.columns.size(); ++j)
    for (std::size_t i = 0; i + 1 < t.rows.size(); ++i)
      CHECK(t.rows[i][j] <= t.rows[i + 1][j] + 1e-9);

  // the solved rate reproduces the target energy per bit
  const double rate = t.rows.front()[2];
  // find snr with mi_bpsk(snr)/snr matching: rate solves snr/rate = 10^(8/10)
  const double target = std::pow(10.0, 0.8);
  const double snr_implied = rate * target;
  CHECK(std::abs(mi_bpsk(snr_implied) - rate) < 1e-8);
}

TEST_CASE("dataset rendering is deterministic") {
  RunConfig cfg;
  cfg.command = Command::sweep;
  cfg.snr_points = 5;
  const std::string a = to_csv(build_dataset(cfg));
  RunConfig cfg2;
  cfg2.command = Command::sweep;
  cfg2.snr_points = 5;
  const std::string b = to_csv(build_dataset(cfg2));
  CHECK(a == b);
  CHECK(a.find("# tool = cbpsk\n") == 0);
  CHECK(a.find("snr_definition") != std::string::npos);
}

TEST_CASE("build_dataset rejects the verification command") {
  RunConfig cfg;
  cfg.command = Command::verify;
  CHECK_THROWS_AS(build_dataset(cfg), std::invalid_argument);
}

TEST_CASE("verification report carries nine named criteria") {
  RunConfig cfg;
  cfg.command = Command::verify;
  cfg.mc_samples = 50000;  // keep the statistical checks quick
  const VerificationReport rep = run_verification(cfg);
  REQUIRE(rep.criteria.size() == 9);
  for (std::size_t i = 0; i < rep.criteria.size(); ++i) {
    CHECK(rep.criteria[i].index == static_cast<int>(i) + 1);
    CHECK_FALSE(rep.criteria[i].name.empty());
    CHECK_FALSE(rep.criteria[i].detail.empty());
    // detail strings must not break the csv layout
    CHECK(rep.criteria[i].detail.find(',') == std::string::npos);
    CHECK(rep.criteria[i].pass);
  }
  CHECK(rep.all_pass());

  const std::string csv = verification_csv(rep, cfg);
  CHECK(csv.find("# tool = cbpsk\n") == 0);
  CHECK(csv.find("index,name,pass,detail\n") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') >= 10);
}
