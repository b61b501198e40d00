#pragma once

#include <iosfwd>
#include <stop_token>
#include <string>
#include <vector>

namespace dtrip::cli {

enum ExitCode : int { ok = 0, internal_error = 1, domain_error = 2, limit_reached = 3 };

// Full command-line driver. `args` excludes the program name. Results go to
// `out` (or --out FILE), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::stop_token stop = {});

}  // namespace dtrip::cli
