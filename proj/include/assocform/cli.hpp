#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace assocform::cli {

// Dispatches one command-line invocation. Results go to `out`, machine-
// readable error JSON to `err`. Exit codes: 0 success, 1 parse/structural
// errors, 2 domain errors (degenerate forms, non-regular sequences, quotient-
// dimension violations).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace assocform::cli
