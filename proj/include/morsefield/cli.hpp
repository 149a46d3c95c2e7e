#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace morsefield::cli {

/// Exit codes: 0 success, 1 domain failure (invalid input object, audit
/// mismatch), 2 input error (unparseable file, bad flags, unknown names).
enum ExitCode : int { kOk = 0, kDomainFailure = 1, kInputError = 2 };

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace morsefield::cli
