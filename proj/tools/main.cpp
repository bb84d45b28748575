#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cbpsk/quadrature.hpp"
#include "cbpsk/verification.hpp"

namespace {

constexpr const char* kDescriptions[] = {
    "Rates of capacity/bpsk/qpsk/psk8/ask4 on a shared Eb/N0 [dB] axis",
    "Per-stream and summed layered rates vs linear SNR",
    "Per-stream and summed layered rates vs per-curve Eb/N0 [dB]",
    "Layered rate minus capacity vs linear SNR (low-SNR window)",
    "Layered rate minus capacity with per-curve Eb/N0 [dB] columns",
    "Two-point rate and its SNR derivative vs gamma",
    "Capacity, single-layer and layered rates with deltas vs linear SNR",
    "Run the built-in correctness checks and write a pass/fail table",
};

int write_output(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return 1;
  }
  f << content;
  f.flush();
  if (!f) {
    std::cerr << "error: failed writing output file: " << path << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constellation-constrained achievable-rate toolkit for AWGN channels"};
  app.set_version_flag("--version", std::string(cbpsk::kToolVersion));
  app.require_subcommand(1);

  double snr_min = 0.0, snr_max = 0.0;
  int snr_points = 0;
  std::vector<double> ratios;
  cbpsk::RunConfig cfg;

  std::array<CLI::App*, 8> subs{};
  for (int i = 0; i < 8; ++i) {
    const auto cmd = static_cast<cbpsk::Command>(i);
    CLI::App* sc = app.add_subcommand(std::string(cbpsk::command_name(cmd)),
                                      kDescriptions[i]);
    if (cmd != cbpsk::Command::verify) {
      sc->add_option("--snr-min", snr_min,
                     "Axis minimum (Eb/N0 dB for fig1, linear SNR otherwise)");
      sc->add_option("--snr-max", snr_max, "Axis maximum");
      sc->add_option("--snr-points", snr_points, "Number of grid points (>= 2)");
    }
    sc->add_option("--ratios", ratios,
                   "beta/alpha values in (0,1), one curve each (default 0.3 0.9)");
    sc->add_option("--quad-order", cfg.quad_order,
                   "Gauss-Hermite order, 2..256 (default 96)");
    sc->add_option("--mc-samples", cfg.mc_samples,
                   "Monte Carlo samples for verify (default 1e7)");
    sc->add_option("--seed", cfg.seed, "RNG seed for verify (default 1)");
    sc->add_option("--out", cfg.out, "Output CSV path (default <command>.csv)");
    subs[static_cast<std::size_t>(i)] = sc;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // help/version are success; anything else is usage
  }

  for (int i = 0; i < 8; ++i) {
    CLI::App* sc = subs[static_cast<std::size_t>(i)];
    if (!sc->parsed()) continue;
    cfg.command = static_cast<cbpsk::Command>(i);
    if (cfg.command != cbpsk::Command::verify) {
      if (sc->count("--snr-min")) cfg.snr_min = snr_min;
      if (sc->count("--snr-max")) cfg.snr_max = snr_max;
      if (sc->count("--snr-points")) cfg.snr_points = snr_points;
    }
    if (sc->count("--ratios")) cfg.ratios = ratios;
  }

  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    const std::string path = cbpsk::output_path(cfg);
    if (cfg.command == cbpsk::Command::verify) {
      const cbpsk::VerificationReport rep = cbpsk::run_verification(cfg);
      for (const auto& c : rep.criteria) {
        std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.index << " "
                  << c.name << ": " << c.detail << "\n";
      }
      if (const int rc = write_output(path, cbpsk::verification_csv(rep, cfg))) {
        return rc;
      }
      std::cout << "wrote " << path << "\n";
      if (!rep.all_pass()) {
        std::cerr << "verification failed\n";
        return 3;
      }
      return 0;
    }
    const std::string content = cbpsk::to_csv(cbpsk::build_dataset(cfg));
    if (const int rc = write_output(path, content)) return rc;
    std::cout << "wrote " << path << "\n";
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  }
}
