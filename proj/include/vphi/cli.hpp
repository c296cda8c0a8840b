#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vphi::cli {

/// Exit codes: 0 success, 1 verification failure (including a false answer
/// from eq / is-id), 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

}  // namespace vphi::cli
