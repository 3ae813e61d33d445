// Acceptance suite: runs every acceptance criterion and prints one
// pass/fail line per criterion, plus the underlying check lines. Exits
// nonzero when any criterion fails. All thresholds are exact.

#include <cstdio>
#include <exception>
#include <map>
#include <string>
#include <vector>

#include "cubics/context.hpp"
#include "cubics/suite.hpp"

namespace {

const char* criterion_title(int c) {
  switch (c) {
    case 1: return "table validation";
    case 2: return "structure counts";
    case 3: return "decomposition goldens";
    case 4: return "nonexistence results";
    case 5: return "uniqueness and coefficients";
    case 6: return "degree-5 relation";
    case 7: return "motivic identity, decategorified";
    case 8: return "node-case Burnside suite";
    case 9: return "cusp-case Burnside suite";
    case 10: return "fourfold suite";
    case 11: return "mod-L obstructions";
    case 12: return "property suites";
  }
  return "?";
}

}  // namespace

int main() {
  int failures = 0;
  try {
    cubics::Context& ctx = cubics::Context::get();
    for (int c = 1; c <= 12; ++c) {
      std::vector<cubics::CriterionResult> results;
      try {
        results = cubics::run_criterion(ctx, c);
      } catch (const std::exception& e) {
        results.push_back({c, "exception", false, e.what()});
      }
      bool pass = true;
      for (const auto& r : results) pass &= r.pass;
      std::printf("%s criterion %02d: %s\n", pass ? "PASS" : "FAIL", c, criterion_title(c));
      for (const auto& r : results) {
        std::printf("       %s %-34s %s\n", r.pass ? "ok  " : "FAIL", r.id.c_str(),
                    r.detail.c_str());
        if (!r.pass) ++failures;
      }
    }
  } catch (const std::exception& e) {
    std::printf("FAIL setup: %s\n", e.what());
    return 1;
  }
  if (failures > 0) std::printf("%d check(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
