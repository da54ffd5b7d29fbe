#include "posreal/problem.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "posreal/error.hpp"

namespace posreal::cli {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& message) {
    throw Error(Errc::ParseError, "field '" + field + "': " + message);
}

Rational to_rational(const json& v, const std::string& field) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const Error&) {
            field_error(field, "not a rational number: " + v.dump());
        }
    }
    field_error(field, "expected an integer or a \"p/q\" string, got " + v.dump());
}

std::vector<Rational> to_rational_list(const json& v, const std::string& field) {
    if (!v.is_array()) field_error(field, "expected an array");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(to_rational(v[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

template <class T>
T get_typed(const json& v, const std::string& field, bool (json::*check)() const noexcept, const char* type) {
    if (!(v.*check)()) field_error(field, std::string("expected ") + type + ", got " + v.dump());
    return v.get<T>();
}

// Line and column of a byte offset, both 1-based.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

std::string_view mode_name(Mode m) noexcept { return m == Mode::Transfer ? "transfer" : "charpoly"; }

TransferFunction ProblemSpec::transfer_function() const {
    return {ShiftedPoly(numerator), ShiftedPoly(denominator)};
}

CharPoly ProblemSpec::char_poly() const { return CharPoly::from_denominator(ShiftedPoly(denominator)); }

ProblemSpec parse_problem(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, col] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
        throw Error(Errc::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                                          "malformed JSON");
    }
    if (!doc.is_object()) throw Error(Errc::ParseError, "problem document must be a JSON object");

    static const std::vector<std::string> known{"mode", "alpha", "denominator", "numerator", "x0", "u", "options"};
    for (const auto& [key, _] : doc.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) field_error(key, "unknown field");
    }

    ProblemSpec spec;
    if (!doc.contains("mode")) field_error("mode", "missing");
    const auto mode = get_typed<std::string>(doc["mode"], "mode", &json::is_string, "a string");
    if (mode == "charpoly") {
        spec.mode = Mode::CharPoly;
    } else if (mode == "transfer") {
        spec.mode = Mode::Transfer;
    } else {
        field_error("mode", "expected \"charpoly\" or \"transfer\", got \"" + mode + "\"");
    }

    if (!doc.contains("denominator")) field_error("denominator", "missing");
    spec.denominator = to_rational_list(doc["denominator"], "denominator");
    if (spec.denominator.size() < 2) field_error("denominator", "degree must be at least 1");
    if (spec.denominator.back() != Rational(1)) {
        field_error("denominator", "leading coefficient must be exactly 1, got " + spec.denominator.back().to_string());
    }

    if (spec.mode == Mode::Transfer) {
        if (!doc.contains("numerator")) field_error("numerator", "required in transfer mode");
        spec.numerator = to_rational_list(doc["numerator"], "numerator");
    } else if (doc.contains("numerator")) {
        field_error("numerator", "not allowed in charpoly mode");
    }

    if (doc.contains("alpha")) spec.alpha = to_rational(doc["alpha"], "alpha");
    if (doc.contains("x0")) spec.x0 = to_rational_list(doc["x0"], "x0");
    if (doc.contains("u")) spec.u = to_rational_list(doc["u"], "u");

    if (doc.contains("options")) {
        const json& opt = doc["options"];
        if (!opt.is_object()) field_error("options", "expected an object");
        for (const auto& [key, value] : opt.items()) {
            const std::string field = "options." + key;
            if (key == "max_candidates") {
                spec.options.max_candidates = get_typed<std::uint64_t>(value, field, &json::is_number_unsigned, "a nonnegative integer");
            } else if (key == "verify") {
                spec.options.verify = get_typed<bool>(value, field, &json::is_boolean, "a boolean");
            } else if (key == "simulate") {
                spec.options.simulate = get_typed<std::size_t>(value, field, &json::is_number_unsigned, "a nonnegative integer");
            } else if (key == "brute_force_check") {
                spec.options.brute_force_check = get_typed<bool>(value, field, &json::is_boolean, "a boolean");
            } else if (key == "format") {
                const auto f = get_typed<std::string>(value, field, &json::is_string, "a string");
                if (f == "json") {
                    spec.options.format = Format::Json;
                } else if (f == "text") {
                    spec.options.format = Format::Text;
                } else {
                    field_error(field, "expected \"json\" or \"text\"");
                }
            } else {
                field_error(field, "unknown option");
            }
        }
    }
    return spec;
}

ProblemSpec load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

}  // namespace posreal::cli
