// Acceptance battery: twelve top-level criteria, one pass/fail line each.
// Exits nonzero if any criterion fails.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "ckgeom/verify.hpp"

namespace {

bool all_passed = true;

void report(int idx, const char* title,
            const std::vector<ckgeom::verify::CheckResult>& results) {
  bool ok = true;
  double worst_ratio = 0.0;
  for (const auto& r : results) {
    ok = ok && r.pass();
    worst_ratio = std::max(worst_ratio, r.worst / r.tol);
  }
  std::printf("%s %2d %-38s checks=%zu worst/tol=%.2e\n",
              ok ? "PASS" : "FAIL", idx, title, results.size(), worst_ratio);
  all_passed = all_passed && ok;
}

std::string capture(const std::string& cmd, int* exit_code) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return "";
  }
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  const int status = pclose(pipe);
  *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

void criterion_cli_determinism(int idx) {
  const char* bin = std::getenv("CKGEOM_CLI");
  bool ok = false;
  if (bin) {
    const std::string cmd = std::string(bin) + " verify all --seed 7";
    int c1 = -1, c2 = -1;
    const std::string r1 = capture(cmd, &c1);
    const std::string r2 = capture(cmd, &c2);
    ok = c1 == 0 && c2 == 0 && !r1.empty() && r1 == r2;
  }
  std::printf("%s %2d %-38s %s\n", ok ? "PASS" : "FAIL", idx,
              "cli-determinism",
              bin ? "verify all --seed 7, two byte-identical runs"
                  : "CKGEOM_CLI not set");
  all_passed = all_passed && ok;
}

}  // namespace

int main() {
  using namespace ckgeom::verify;
  const uint64_t seed = 2026;
  report(1, "structure-constants", suite_structure(seed));
  report(2, "ambient-form-invariance", suite_invariance(seed));
  report(3, "subgroups-vs-exponential-oracle", suite_expm(seed));
  report(4, "geodesic-curvature", suite_curvature(seed));
  report(5, "power-of-a-point", suite_power(seed));
  report(6, "secant-integral-identities", suite_lambda(seed));
  report(7, "conformal-killing", suite_killing(seed));
  report(8, "laplace-symmetries", suite_laplace(seed));
  report(9, "compactification-coverage", suite_compact(200));
  report(10, "cycle-preservation", suite_cycle_preservation(seed));
  report(11, "contraction-continuity", suite_contraction(seed));
  criterion_cli_determinism(12);
  std::printf("%s\n", all_passed ? "ACCEPTANCE: ALL PASSED"
                                 : "ACCEPTANCE: FAILURES PRESENT");
  return all_passed ? 0 : 1;
}
