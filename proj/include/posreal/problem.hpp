#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posreal/rational.hpp"
#include "posreal/shifted_polynomial.hpp"

namespace posreal::cli {

enum class Mode { CharPoly, Transfer };
enum class Format { Json, Text };

struct RunOptions {
    std::uint64_t max_candidates = 100'000'000;
    bool verify = false;
    /// Simulation horizon; 0 disables the simulator probe.
    std::size_t simulate = 0;
    Format format = Format::Json;
    bool brute_force_check = false;
};

/// A realization problem as read from a problem file.
///
/// Coefficient lists are in ascending powers of lambda: index i multiplies
/// lambda^i. The denominator must be monic (last entry exactly 1).
struct ProblemSpec {
    Mode mode = Mode::CharPoly;
    std::optional<Rational> alpha;
    std::vector<Rational> denominator;
    std::vector<Rational> numerator;  // transfer mode only
    std::optional<Vector> x0;         // simulator initial state
    std::optional<Vector> u;          // simulator scalar input sequence
    RunOptions options;

    TransferFunction transfer_function() const;
    CharPoly char_poly() const;
};

/// Parses a JSON problem document. Throws Error(ParseError) with a line and
/// column for malformed JSON, or the offending field path otherwise.
ProblemSpec parse_problem(std::string_view text);

ProblemSpec load_problem(const std::string& path);

std::string_view mode_name(Mode m) noexcept;

}  // namespace posreal::cli
