#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidlink::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Runs `braidlink <invariants|paper|construct> ...`; `args` excludes the
/// program name. Payload goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace braidlink::cli
