#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sire::cli {

/// Exit statuses of the `sire` tool.
enum Exit : int {
    kOk = 0,
    kRejected = 1,
    kBadFlags = 2,
    kInputError = 3,
    kBoundExceeded = 4,
};

/// Runs the tool on `args` (without the program name). `in` backs
/// `--input -`; schemas and reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace sire::cli
