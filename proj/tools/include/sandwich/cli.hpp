#pragma once

#include "sandwich/error.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace sandwich::cli {

/// Exit statuses: 0 success, 1 usage / parse / domain / ingest errors,
/// 2 no limit (NotConvergent, SandwichGap, ReciprocalOfNull, NotSeparated),
/// 3 VerificationFailed, 4 battery failure.
int exit_code_for(ErrorCode code) noexcept;

/// Runs one command line (without the program name). Machine output and
/// error JSON go to `out`; `err` only receives help requested on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sandwich::cli
