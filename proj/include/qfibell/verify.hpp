#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qfibell {

struct VerifyCheck {
  std::string name;
  double max_err = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  int max_parties = 8;
  unsigned long long seed = 12345;
  // Test hook: name of a check whose result is perturbed so it must fail.
  std::string inject_fault;
};

// Cross-checks every Dicke-basis quantity against the full 2^N brute-force
// route on a corpus of named and seeded random states, plus the LHV / Mermin
// bound identities.
std::vector<VerifyCheck> run_verify(const VerifyOptions& options);

// Prints one line per check; returns true when all checks pass.
bool print_verify_table(const std::vector<VerifyCheck>& checks,
                        std::ostream& out);

}  // namespace qfibell
