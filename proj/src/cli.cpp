#include "posreal/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "posreal/error.hpp"
#include "posreal/fractional_sim.hpp"
#include "posreal/oracle.hpp"

namespace posreal::cli {

using nlohmann::ordered_json;

namespace {

ordered_json rational_list(const std::vector<Rational>& values) {
    ordered_json out = ordered_json::array();
    for (const auto& v : values) out.push_back(v.to_string());
    return out;
}

ordered_json matrix_json(const Matrix& a) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json realization_json(const Realization& r) {
    ordered_json out;
    out["matrix"] = matrix_json(r.a);
    ordered_json arcs = ordered_json::array();
    for (const auto& [arc, w] : r.weights) {
        arcs.push_back(ordered_json{{"tail", arc.tail}, {"head", arc.head}, {"weight", w.to_string()}});
    }
    out["arcs"] = std::move(arcs);

    std::vector<const CycleAssignment*> order;
    for (const auto& a : r.structure.assignment) order.push_back(&a);
    std::sort(order.begin(), order.end(), [](const auto* x, const auto* y) { return x->cycle < y->cycle; });
    ordered_json cycles = ordered_json::array();
    for (const auto* a : order) {
        cycles.push_back(ordered_json{{"vertices", a->cycle.vertices()}, {"coefficient", a->monomial.coefficient.to_string()}});
    }
    out["cycles"] = std::move(cycles);
    out["equations"] = r.equations;
    return out;
}

oracle::ArcStructure arc_structure(const Realization& r) {
    oracle::ArcStructure s;
    for (const auto& [arc, _] : r.weights) s.push_back(arc);
    return s;
}

ordered_json input_echo(const ProblemSpec& spec) {
    ordered_json echo;
    echo["mode"] = mode_name(spec.mode);
    echo["alpha"] = spec.alpha ? ordered_json(spec.alpha->to_string()) : ordered_json(nullptr);
    echo["denominator"] = rational_list(spec.denominator);
    echo["numerator"] = spec.mode == Mode::Transfer ? rational_list(spec.numerator) : ordered_json(nullptr);
    echo["options"] = ordered_json{{"max_candidates", spec.options.max_candidates},
                                   {"verify", spec.options.verify},
                                   {"simulate", spec.options.simulate},
                                   {"brute_force_check", spec.options.brute_force_check}};
    return echo;
}

}  // namespace

Report run(const ProblemSpec& spec) {
    Report report;
    auto& doc = report.document;
    doc["input_echo"] = input_echo(spec);

    if (spec.options.simulate > 0 && !spec.alpha) {
        throw Error(Errc::ParseError, "field 'alpha': required when simulating");
    }

    const RealizeOptions ropt{spec.options.max_candidates};
    RealizationSet set = spec.mode == Mode::Transfer ? realize(spec.transfer_function(), ropt)
                                                     : realize(spec.char_poly(), ropt);
    const int n = static_cast<int>(set.target.order());

    doc["direct_term"] = set.direct_term ? ordered_json(set.direct_term->to_string()) : ordered_json(nullptr);
    ordered_json realizations = ordered_json::array();
    for (const auto& r : set.realizations) realizations.push_back(realization_json(r));
    doc["realizations"] = std::move(realizations);

    bool checks_pass = true;
    const auto& d = set.diagnostics;
    ordered_json diag;
    diag["order"] = n;
    ordered_json monomials = ordered_json::array();
    for (const auto& m : set.monomials) {
        monomials.push_back(ordered_json{{"degree", m.degree}, {"coefficient", m.coefficient.to_string()}});
    }
    diag["monomials"] = std::move(monomials);
    diag["candidates_examined"] = d.candidates_examined;
    diag["accepted"] = set.realizations.size();
    diag["rejected_disjoint"] = d.rejected_disjoint;
    diag["rejected_uncovered"] = d.rejected_uncovered;
    diag["rejected_extra_cycles"] = d.rejected_extra_cycles;
    diag["rejected_weight_conflict"] = d.rejected_weight_conflict;
    diag["duplicates"] = d.duplicates;
    if (spec.options.brute_force_check) {
        if (n <= 3) {
            const auto expected = oracle::brute_force_structures(set.monomials, n);
            std::set<oracle::ArcStructure> got;
            for (const auto& r : set.realizations) got.insert(arc_structure(r));
            const bool match = got == expected;
            checks_pass = checks_pass && match;
            diag["brute_force_check"] = ordered_json{{"structures", expected.size()}, {"matches", match}};
        } else {
            diag["brute_force_check"] = ordered_json{{"skipped", "order above 3"}};
        }
    }
    doc["diagnostics"] = std::move(diag);

    ordered_json verification = ordered_json::array();
    if (spec.options.verify) {
        for (std::size_t i = 0; i < set.realizations.size(); ++i) {
            const auto& r = set.realizations[i];
            const bool poly_ok = oracle::verify_realization(r.a, set.target);
            bool nonneg = true;
            for (std::size_t row = 0; row < r.a.rows(); ++row) {
                for (std::size_t col = 0; col < r.a.cols(); ++col) nonneg = nonneg && r.a(row, col).sign() >= 0;
            }
            checks_pass = checks_pass && poly_ok && nonneg;
            verification.push_back(ordered_json{{"realization", i}, {"char_poly_matches", poly_ok}, {"nonnegative", nonneg}});
        }
    }
    doc["verification"] = std::move(verification);

    if (spec.options.simulate > 0) {
        const std::size_t horizon = spec.options.simulate;
        const auto un = static_cast<std::size_t>(n);
        const Vector x0 = spec.x0.value_or(Vector(un, Rational(1)));
        if (x0.size() != un) throw Error(Errc::ParseError, "field 'x0': expected " + std::to_string(n) + " entries");
        std::vector<Vector> u(horizon + 1, Vector{Rational()});
        if (spec.u) {
            if (spec.u->size() < horizon) {
                throw Error(Errc::ParseError, "field 'u': need at least " + std::to_string(horizon) + " entries");
            }
            for (std::size_t k = 0; k < spec.u->size() && k <= horizon; ++k) u[k] = Vector{(*spec.u)[k]};
        }
        Matrix b(un, 1), c(1, un), dd(1, 1);
        b(0, 0) = 1;
        c(0, 0) = 1;
        dd(0, 0) = set.direct_term.value_or(Rational());

        ordered_json sim;
        sim["probe"] = "B = e1 column, C = e1 row, D = direct term (0 in charpoly mode); x0 and u from the problem or all-ones / zero";
        sim["alpha"] = spec.alpha->to_string();
        sim["horizon"] = horizon;
        ordered_json runs = ordered_json::array();
        for (std::size_t i = 0; i < set.realizations.size(); ++i) {
            const FractionalSystem sys(set.realizations[i].a, b, c, dd, *spec.alpha);
            const Trajectory t = simulate(sys, x0, u, horizon);
            const bool positive = check_internal_positivity(t);
            checks_pass = checks_pass && positive;
            runs.push_back(ordered_json{{"realization", i},
                                        {"positive_matrix", check_positive_realization(sys.a(), sys.alpha())},
                                        {"internally_positive", positive},
                                        {"final_state", rational_list(t.states.back())}});
        }
        sim["runs"] = std::move(runs);
        doc["simulation"] = std::move(sim);
    }

    if (set.realizations.empty()) {
        report.exit_code = kNoRealization;
    } else {
        report.exit_code = checks_pass ? kOk : kCheckFailed;
    }
    return report;
}

std::string render_json(const Report& report) { return report.document.dump(2) + "\n"; }

std::string render_text(const Report& report) {
    const auto& doc = report.document;
    std::ostringstream os;
    const auto& echo = doc["input_echo"];
    os << "mode: " << echo["mode"].get<std::string>() << "\n";
    os << "order: " << doc["diagnostics"]["order"].get<int>() << "\n";
    if (!doc["direct_term"].is_null()) os << "D = " << doc["direct_term"].get<std::string>() << "\n";
    os << "realizations: " << doc["realizations"].size() << "\n";
    std::size_t index = 0;
    for (const auto& r : doc["realizations"]) {
        os << "\n[" << index++ << "] A =\n";
        for (const auto& row : r["matrix"]) {
            os << "   ";
            for (const auto& entry : row) os << " " << entry.get<std::string>();
            os << "\n";
        }
        os << "    equations:";
        for (const auto& eq : r["equations"]) os << "  " << eq.get<std::string>();
        os << "\n";
    }
    const auto& diag = doc["diagnostics"];
    os << "\ncandidates examined: " << diag["candidates_examined"].get<std::uint64_t>()
       << " (disjoint " << diag["rejected_disjoint"].get<std::uint64_t>()
       << ", uncovered " << diag["rejected_uncovered"].get<std::uint64_t>()
       << ", extra cycles " << diag["rejected_extra_cycles"].get<std::uint64_t>()
       << ", weight conflict " << diag["rejected_weight_conflict"].get<std::uint64_t>() << ")\n";
    if (diag.contains("brute_force_check")) os << "brute-force check: " << diag["brute_force_check"].dump() << "\n";
    for (const auto& v : doc["verification"]) {
        os << "verify [" << v["realization"].get<std::size_t>() << "]: "
           << (v["char_poly_matches"].get<bool>() && v["nonnegative"].get<bool>() ? "ok" : "FAILED") << "\n";
    }
    if (doc.contains("simulation")) {
        for (const auto& s : doc["simulation"]["runs"]) {
            os << "simulate [" << s["realization"].get<std::size_t>() << "]: "
               << (s["internally_positive"].get<bool>() ? "positive" : "NOT positive") << "\n";
        }
    }
    return os.str();
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimal nonnegative state matrices of fractional positive systems via digraph cycles"};
    std::string path;
    std::optional<std::uint64_t> max_candidates;
    bool verify = false;
    bool brute = false;
    std::optional<std::size_t> simulate;
    std::optional<std::string> format;
    app.add_option("file", path, "problem file (JSON)")->required();
    app.add_option("--max-candidates", max_candidates, "upper bound on the candidate product");
    app.add_flag("--verify", verify, "check every matrix against the characteristic polynomial");
    app.add_option("--simulate", simulate, "simulate each realization for K steps and check positivity");
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--brute-force-check", brute, "compare structures with an exhaustive scan (n <= 3)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        ProblemSpec spec = load_problem(path);
        if (max_candidates) spec.options.max_candidates = *max_candidates;
        if (verify) spec.options.verify = true;
        if (brute) spec.options.brute_force_check = true;
        if (simulate) spec.options.simulate = *simulate;
        if (format) spec.options.format = *format == "text" ? Format::Text : Format::Json;

        const Report report = run(spec);
        out << (spec.options.format == Format::Text ? render_text(report) : render_json(report));
        return report.exit_code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace posreal::cli
