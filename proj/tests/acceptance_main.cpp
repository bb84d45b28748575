// Acceptance gate: runs the nine built-in correctness criteria at their
// production settings (hermite order 96, 1e7 monte-carlo samples, seed 1)
// and prints one PASS/FAIL line per criterion.  Exit code 0 only if all pass.

#include <cstdio>
#include <exception>

#include "cbpsk/verification.hpp"

int main() {
  cbpsk::RunConfig cfg;
  cfg.command = cbpsk::Command::verify;
  try {
    const cbpsk::VerificationReport report = cbpsk::run_verification(cfg);
    std::size_t passed = 0;
    for (const cbpsk::CriterionResult& c : report.criteria) {
      std::printf("%s %d %s: %s\n", c.pass ? "PASS" : "FAIL", c.index,
                  c.name.c_str(), c.detail.c_str());
      if (c.pass) ++passed;
    }
    const bool ok = report.all_pass();
    std::printf("%s: %zu/%zu criteria passed\n", ok ? "ACCEPTED" : "REJECTED",
                passed, report.criteria.size());
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance run aborted: %s\n", e.what());
    return 1;
  }
}
