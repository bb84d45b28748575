#pragma once

#include <string>
#include <vector>

#include "cbpsk/datasets.hpp"

namespace cbpsk {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // measured values; deterministic formatting, no commas
};

struct VerificationReport {
  std::vector<CriterionResult> criteria;
  bool all_pass() const;
};

// Runs the nine built-in correctness properties of the toolkit: derivative
// limit, low-SNR excess-rate expansion, sign pattern against capacity,
// high-SNR saturation, Monte Carlo vs quadrature agreement, the capacity
// bound on the two-point rate, cross-route internal consistency, SIC
// simulator analytics, and determinism.  The config supplies quad_order,
// mc_samples and seed; its command and grid fields are ignored.
VerificationReport run_verification(const RunConfig& cfg);

// Renders the report as a CSV (index, name, pass, detail) with the same
// metadata conventions as the dataset tables.
std::string verification_csv(const VerificationReport& rep, const RunConfig& cfg);

}  // namespace cbpsk
