#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "posreal/problem.hpp"
#include "posreal/realizer.hpp"

namespace posreal::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kNoRealization = 2,
    kCheckFailed = 3,
};

/// Machine-readable report. Field order is fixed; fractions are "p" or "p/q" strings.
struct Report {
    nlohmann::ordered_json document;
    int exit_code = kOk;
};

/// Runs the full pipeline for one problem: realization, then the optional
/// oracle verification, brute-force cross-check and simulator probe.
/// Library errors propagate as posreal::Error.
Report run(const ProblemSpec& spec);

std::string render_json(const Report& report);
std::string render_text(const Report& report);

/// Entry point behind the `realize` executable.
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posreal::cli
