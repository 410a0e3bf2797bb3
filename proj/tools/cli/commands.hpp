#pragma once

#include "hopfmzv/verify.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfmzv::cli {

/// Process exit codes. Each library error class has its own code.
enum ExitCode : int {
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_usage = 2,           // unknown flags, missing arguments
    exit_parse = 3,           // expression / composition syntax
    exit_domain = 4,          // DomainError, ComparisonError
    exit_coverage = 5,        // CoverageError
    exit_singular = 6,        // SingularityError
    exit_divergent = 7,       // DivergenceError
    exit_character_file = 8,  // CharacterError, unreadable files
    exit_internal = 9,
};

/// Runs one CLI invocation. `args` excludes the program name. Structured
/// output goes to `out`, one-line diagnostics to `err`.
/// One-line diagnostic for a failed property.
std::string describe_failure(const PropertyResult& r);

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hopfmzv::cli
