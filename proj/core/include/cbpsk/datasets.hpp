#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cbpsk/csv.hpp"

namespace cbpsk {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class Command { fig1, fig2a, fig2b, fig3a, fig3b, fig4, sweep, verify };

std::string_view command_name(Command cmd);
std::optional<Command> parse_command(std::string_view name);

// Axis layout of one dataset command: endpoint values, point count and
// spacing.  fig1's axis is Eb/N0 in dB; all others are linear SNR.
struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int points = 0;
  bool geometric = false;
};

// Materializes the axis; endpoints are exact.
std::vector<double> make_grid(const GridSpec& g);

// One dataset or verification run.  Unset optionals fall back to the
// command's defaults (see default_grid).
struct RunConfig {
  Command command = Command::sweep;
  std::optional<double> snr_min;
  std::optional<double> snr_max;
  std::optional<int> snr_points;
  std::vector<double> ratios{0.3, 0.9};  // beta/alpha per cocktail curve
  int quad_order = 96;
  std::uint64_t mc_samples = 10'000'000;
  std::uint64_t seed = 1;
  std::string out;  // empty: "<command>.csv"

  // Throws std::invalid_argument on out-of-domain values.
  void validate() const;
};

// Built-in axis for a command (verify has none and asserts).
GridSpec default_grid(Command cmd);

// default_grid with the config's overrides applied, validated for the
// command (geometric axes need min > 0, etc.).
GridSpec resolved_grid(const RunConfig& cfg);

// Computes the table for any non-verify command.  Heavy lifting is in the
// rate/cocktail modules; this assembles columns and metadata.
Table build_dataset(const RunConfig& cfg);

// Output filename for the config (the --out override or "<command>.csv").
std::string output_path(const RunConfig& cfg);

}  // namespace cbpsk
