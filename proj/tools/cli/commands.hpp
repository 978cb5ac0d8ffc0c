#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twoadic::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitParse = 2,
  kExitSingular = 3,
  kExitFamilyExcluded = 4,
  kExitClaimFalsified = 5,
};

/// Worker threads for group enumeration, from TWOADIC_WORKERS (default 1).
unsigned workers_from_env();

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace twoadic::cli
