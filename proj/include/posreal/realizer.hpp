#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posreal/digraph.hpp"
#include "posreal/matrix.hpp"
#include "posreal/rational.hpp"
#include "posreal/shifted_polynomial.hpp"

namespace posreal {

struct CycleAssignment {
    Monomial monomial;
    Cycle cycle;
};

/// One cycle choice per monomial together with the digraph they span.
struct StructureCandidate {
    std::vector<CycleAssignment> assignment;
    Digraph union_graph;
};

/// Lazily walks the Cartesian product of enumerate_monomial_cycles(n, deg)
/// over the monomials, first monomial most significant, in lexicographic order.
class CandidateStream {
public:
    CandidateStream(std::vector<Monomial> monomials, int n);

    std::optional<StructureCandidate> next();

    /// Size of the full product, saturated at UINT64_MAX.
    std::uint64_t total() const noexcept { return total_; }
    const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
    const std::vector<std::vector<Cycle>>& choices() const noexcept { return choices_; }

private:
    std::vector<Monomial> monomials_;
    int n_;
    std::vector<std::vector<Cycle>> choices_;
    std::vector<std::size_t> digits_;
    std::uint64_t total_ = 0;
    bool done_ = false;
};

inline CandidateStream combine_candidates(std::vector<Monomial> monomials, int n) {
    return CandidateStream(std::move(monomials), n);
}

enum class Rejection { None, DisjointUnion, Uncovered, ExtraCycles };

std::string_view rejection_name(Rejection r) noexcept;

struct StructureVerdict {
    Rejection reason = Rejection::None;
    bool accepted() const noexcept { return reason == Rejection::None; }
    explicit operator bool() const noexcept { return accepted(); }
};

/// Accepts a candidate iff no two assigned cycles are vertex-disjoint, every
/// vertex lies on an assigned cycle, and the union graph has no simple cycle
/// besides the assigned ones. Checked in that order; the first failure is
/// the reported reason.
StructureVerdict validate_structure(const StructureCandidate& c);

using WeightMap = std::map<Arc, Rational>;

/// Canonical solution of prod_{arc in cycle} w(arc) = coefficient.
///
/// Cycles are processed in ascending (length, vertices) order. Arcs already
/// fixed by an earlier cycle keep their weight; fresh arcs get 1 except the
/// lexicographically last fresh arc, which absorbs the remaining factor.
/// Throws WeightConflict when a cycle has no fresh arc and its fixed product
/// differs from the coefficient.
WeightMap solve_weights(const StructureCandidate& c, const std::vector<Monomial>& monomials);

/// Weight equations of a structure, one per cycle in processing order,
/// e.g. "w(1,2)·w(2,1)=2".
std::vector<std::string> weight_equations(const StructureCandidate& c);

/// A(head, tail) = w(tail -> head), zero elsewhere (1-based labels mapped to 0-based indices).
Matrix build_matrix(const WeightMap& weights, int n);

struct Realization {
    Matrix a;
    StructureCandidate structure;
    WeightMap weights;
    std::vector<std::string> equations;
};

struct RealizeDiagnostics {
    std::uint64_t candidates_examined = 0;
    std::uint64_t rejected_disjoint = 0;
    std::uint64_t rejected_uncovered = 0;
    std::uint64_t rejected_extra_cycles = 0;
    std::uint64_t rejected_weight_conflict = 0;
    std::uint64_t duplicates = 0;

    friend bool operator==(const RealizeDiagnostics&, const RealizeDiagnostics&) = default;
};

struct RealizeOptions {
    /// Upper bound on the candidate product; larger inputs fail before any work.
    std::uint64_t max_candidates = 100'000'000;
};

struct RealizationSet {
    CharPoly target;
    std::vector<Monomial> monomials;
    std::optional<Rational> direct_term;
    std::vector<Realization> realizations;
    RealizeDiagnostics diagnostics;
};

/// Every minimal nonnegative state matrix whose digraph realizes the given
/// characteristic polynomial, one canonical weighting per accepted structure.
///
/// Throws NegativeCoefficient, EnumerationBudgetExceeded, and OrderTooLarge
/// for n > 64.
RealizationSet realize(const CharPoly& target, const RealizeOptions& options = {});

/// Same as above for the transfer function's denominator, with D attached.
/// Also throws NotProper and NotMonic.
RealizationSet realize(const TransferFunction& t, const RealizeOptions& options = {});

/// A + alpha I entrywise nonnegative. Throws AlphaOutOfRange unless 0 < alpha < 1.
bool check_positive_realization(const Matrix& a, const Rational& alpha);

}  // namespace posreal
