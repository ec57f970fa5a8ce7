#pragma once

#include <iosfwd>

namespace vsqc::cli {

/// Dispatches one command line. Payload (JSON/CSV/alist) goes to `out` or
/// the --out file; diagnostics go to `err`. Returns the process exit code:
/// 0 success, 1 verification failure, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vsqc::cli
