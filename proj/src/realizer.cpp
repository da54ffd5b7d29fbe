#include "posreal/realizer.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "posreal/error.hpp"

namespace posreal {

CandidateStream::CandidateStream(std::vector<Monomial> monomials, int n) : monomials_(std::move(monomials)), n_(n) {
    choices_.reserve(monomials_.size());
    total_ = monomials_.empty() ? 0 : 1;
    for (const Monomial& m : monomials_) {
        choices_.push_back(enumerate_monomial_cycles(n_, m.degree));
        const std::uint64_t count = choices_.back().size();
        if (total_ > std::numeric_limits<std::uint64_t>::max() / count) {
            total_ = std::numeric_limits<std::uint64_t>::max();
        } else {
            total_ *= count;
        }
    }
    digits_.assign(monomials_.size(), 0);
    done_ = monomials_.empty();
}

std::optional<StructureCandidate> CandidateStream::next() {
    if (done_) return std::nullopt;
    StructureCandidate c{{}, Digraph(n_)};
    c.assignment.reserve(monomials_.size());
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
        const Cycle& cyc = choices_[i][digits_[i]];
        c.assignment.push_back({monomials_[i], cyc});
        for (const Arc& a : cyc.arcs()) c.union_graph.add_arc(a);
    }
    std::size_t slot = digits_.size();
    while (slot-- > 0) {
        if (++digits_[slot] < choices_[slot].size()) break;
        digits_[slot] = 0;
        if (slot == 0) done_ = true;
    }
    return c;
}

std::string_view rejection_name(Rejection r) noexcept {
    switch (r) {
        case Rejection::None: return "accepted";
        case Rejection::DisjointUnion: return "disjoint_union";
        case Rejection::Uncovered: return "uncovered";
        case Rejection::ExtraCycles: return "extra_cycles";
    }
    return "unknown";
}

StructureVerdict validate_structure(const StructureCandidate& c) {
    const auto& asg = c.assignment;
    for (std::size_t i = 0; i < asg.size(); ++i) {
        for (std::size_t j = i + 1; j < asg.size(); ++j) {
            if (vertex_disjoint(asg[i].cycle, asg[j].cycle)) return {Rejection::DisjointUnion};
        }
    }
    for (Vertex v = 1; v <= c.union_graph.order(); ++v) {
        const bool covered =
            std::any_of(asg.begin(), asg.end(), [v](const CycleAssignment& a) { return a.cycle.contains(v); });
        if (!covered) return {Rejection::Uncovered};
    }

    std::vector<Cycle> expected;
    expected.reserve(asg.size());
    for (const auto& a : asg) expected.push_back(a.cycle);
    std::sort(expected.begin(), expected.end());

    std::vector<Cycle> found;
    visit_simple_cycles(c.union_graph, [&](std::span<const Vertex> path) {
        found.emplace_back(std::vector<Vertex>(path.begin(), path.end()));
        return found.size() <= expected.size();
    });
    std::sort(found.begin(), found.end());
    if (found != expected) return {Rejection::ExtraCycles};
    return {};
}

namespace {

std::vector<const CycleAssignment*> processing_order(const StructureCandidate& c) {
    std::vector<const CycleAssignment*> order;
    order.reserve(c.assignment.size());
    for (const auto& a : c.assignment) order.push_back(&a);
    std::sort(order.begin(), order.end(), [](const auto* x, const auto* y) { return x->cycle < y->cycle; });
    return order;
}

std::string arc_symbol(const Arc& a) { return "w(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")"; }

}  // namespace

WeightMap solve_weights(const StructureCandidate& c, const std::vector<Monomial>& monomials) {
    WeightMap weights;
    for (const CycleAssignment* a : processing_order(c)) {
        const auto deg = static_cast<int>(a->cycle.length());
        const auto m = std::find_if(monomials.begin(), monomials.end(),
                                    [deg](const Monomial& mono) { return mono.degree == deg; });
        if (m == monomials.end()) {
            throw std::invalid_argument("no monomial of degree " + std::to_string(deg) + " for an assigned cycle");
        }

        Rational fixed(1);
        std::vector<Arc> fresh;
        for (const Arc& arc : a->cycle.arcs()) {
            if (auto it = weights.find(arc); it != weights.end()) {
                fixed *= it->second;
            } else {
                fresh.push_back(arc);
            }
        }
        if (fresh.empty()) {
            if (fixed != m->coefficient) {
                throw Error(Errc::WeightConflict, "cycle product " + fixed.to_string() + " fixed by earlier cycles, need " +
                                                      m->coefficient.to_string());
            }
            continue;
        }
        std::sort(fresh.begin(), fresh.end());
        for (std::size_t i = 0; i + 1 < fresh.size(); ++i) weights.emplace(fresh[i], Rational(1));
        weights.emplace(fresh.back(), m->coefficient / fixed);
    }
    return weights;
}

std::vector<std::string> weight_equations(const StructureCandidate& c) {
    std::vector<std::string> out;
    for (const CycleAssignment* a : processing_order(c)) {
        std::string eq;
        for (const Arc& arc : a->cycle.arcs()) {
            if (!eq.empty()) eq += "·";
            eq += arc_symbol(arc);
        }
        eq += "=" + a->monomial.coefficient.to_string();
        out.push_back(std::move(eq));
    }
    return out;
}

Matrix build_matrix(const WeightMap& weights, int n) {
    Matrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (const auto& [arc, w] : weights) {
        a(static_cast<std::size_t>(arc.head - 1), static_cast<std::size_t>(arc.tail - 1)) = w;
    }
    return a;
}

RealizationSet realize(const CharPoly& target, const RealizeOptions& options) {
    RealizationSet out{target, decompose_monomials(target), std::nullopt, {}, {}};
    const int n = static_cast<int>(target.order());
    if (n > 64) throw Error(Errc::OrderTooLarge, "realize supports orders up to 64");
    if (out.monomials.empty()) return out;

    CandidateStream stream(out.monomials, n);
    if (stream.total() > options.max_candidates) {
        throw Error(Errc::EnumerationBudgetExceeded, std::to_string(stream.total()) + " candidates exceed the limit of " +
                                                         std::to_string(options.max_candidates));
    }

    // Vertex bitmasks for the cheap structural checks.
    std::vector<std::vector<std::uint64_t>> masks;
    for (const auto& list : stream.choices()) {
        auto& row = masks.emplace_back();
        for (const Cycle& cyc : list) {
            std::uint64_t m = 0;
            for (Vertex v : cyc.vertices()) m |= std::uint64_t{1} << (v - 1);
            row.push_back(m);
        }
    }
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    auto& diag = out.diagnostics;
    std::set<WeightMap> seen;
    const std::size_t slots = masks.size();
    std::vector<std::size_t> digits(slots, 0);
    while (true) {
        ++diag.candidates_examined;

        bool disjoint = false;
        std::uint64_t cover = 0;
        for (std::size_t i = 0; i < slots && !disjoint; ++i) {
            const std::uint64_t mi = masks[i][digits[i]];
            cover |= mi;
            for (std::size_t j = i + 1; j < slots; ++j) {
                if ((mi & masks[j][digits[j]]) == 0) {
                    disjoint = true;
                    break;
                }
            }
        }

        if (disjoint) {
            ++diag.rejected_disjoint;
        } else if (cover != all) {
            ++diag.rejected_uncovered;
        } else {
            StructureCandidate cand{{}, Digraph(n)};
            for (std::size_t i = 0; i < slots; ++i) {
                const Cycle& cyc = stream.choices()[i][digits[i]];
                cand.assignment.push_back({out.monomials[i], cyc});
                for (const Arc& a : cyc.arcs()) cand.union_graph.add_arc(a);
            }
            const StructureVerdict verdict = validate_structure(cand);
            if (verdict.reason == Rejection::ExtraCycles) {
                ++diag.rejected_extra_cycles;
            } else if (verdict.accepted()) {
                try {
                    WeightMap w = solve_weights(cand, out.monomials);
                    if (seen.insert(w).second) {
                        for (const auto& [arc, value] : w) cand.union_graph.set_weight(arc, value);
                        Realization r{build_matrix(w, n), std::move(cand), std::move(w), {}};
                        r.equations = weight_equations(r.structure);
                        out.realizations.push_back(std::move(r));
                    } else {
                        ++diag.duplicates;
                    }
                } catch (const Error& e) {
                    if (e.code() != Errc::WeightConflict) throw;
                    ++diag.rejected_weight_conflict;
                }
            } else if (verdict.reason == Rejection::DisjointUnion) {
                ++diag.rejected_disjoint;
            } else {
                ++diag.rejected_uncovered;
            }
        }

        std::size_t slot = slots;
        bool wrapped = true;
        while (slot-- > 0) {
            if (++digits[slot] < masks[slot].size()) {
                wrapped = false;
                break;
            }
            digits[slot] = 0;
        }
        if (wrapped) break;
    }
    return out;
}

RealizationSet realize(const TransferFunction& t, const RealizeOptions& options) {
    const NormalizedTransfer norm = normalize_negative_powers(t);
    RealizationSet out = realize(norm.denominator, options);
    out.direct_term = extract_direct_term(t).d;
    return out;
}

bool check_positive_realization(const Matrix& a, const Rational& alpha) {
    if (alpha.sign() <= 0 || alpha >= Rational(1)) {
        throw Error(Errc::AlphaOutOfRange, "alpha = " + alpha.to_string() + " must satisfy 0 < alpha < 1");
    }
    if (!a.is_square()) throw Error(Errc::NotSquare, "state matrix must be square");
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational entry = i == j ? a(i, j) + alpha : a(i, j);
            if (entry.sign() < 0) return false;
        }
    }
    return true;
}

}  // namespace posreal
