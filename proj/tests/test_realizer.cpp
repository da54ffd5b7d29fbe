#include <set>

#include "doctest.h"
#include "posreal/error.hpp"
#include "posreal/oracle.hpp"
#include "posreal/realizer.hpp"
#include "support.hpp"

using namespace posreal;

namespace {

StructureCandidate make_candidate(const std::vector<std::pair<Monomial, Cycle>>& picks, int n) {
    StructureCandidate c{{}, Digraph(n)};
    std::vector<Cycle> cycles;
    for (const auto& [m, cyc] : picks) {
        c.assignment.push_back({m, cyc});
        cycles.push_back(cyc);
    }
    c.union_graph = union_of_cycles(cycles, n);
    return c;
}

const std::vector<Monomial> kReferenceMonomials{{1, Rational(1)}, {2, Rational(2)}};

StructureCandidate figure5() {
    return make_candidate({{kReferenceMonomials[0], Cycle({1})}, {kReferenceMonomials[1], Cycle({1, 2})}}, 2);
}

StructureCandidate figure6() {
    return make_candidate({{kReferenceMonomials[0], Cycle({2})}, {kReferenceMonomials[1], Cycle({1, 2})}}, 2);
}

std::vector<Cycle> cycles_of(const StructureCandidate& c) {
    std::vector<Cycle> out;
    for (const auto& a : c.assignment) out.push_back(a.cycle);
    return out;
}

Errc error_code(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::ParseError;
}

}  // namespace

TEST_CASE("combine_candidates") {
    SUBCASE("reference monomials give the two structures in order") {
        auto stream = combine_candidates(kReferenceMonomials, 2);
        CHECK(stream.total() == 2);
        auto first = stream.next();
        auto second = stream.next();
        REQUIRE(first);
        REQUIRE(second);
        CHECK_FALSE(stream.next());
        CHECK(cycles_of(*first) == std::vector<Cycle>{Cycle({1}), Cycle({1, 2})});
        CHECK(cycles_of(*second) == std::vector<Cycle>{Cycle({2}), Cycle({1, 2})});
        CHECK(first->union_graph.arcs() == std::vector<Arc>{{1, 1}, {1, 2}, {2, 1}});
    }
    SUBCASE("single monomial of degree one") {
        auto stream = combine_candidates({{1, Rational(4)}}, 1);
        auto only = stream.next();
        REQUIRE(only);
        CHECK(cycles_of(*only) == std::vector<Cycle>{Cycle({1})});
        CHECK_FALSE(stream.next());
    }
    SUBCASE("three monomials on three vertices") {
        auto stream = combine_candidates({{1, Rational(1)}, {2, Rational(1)}, {3, Rational(1)}}, 3);
        CHECK(stream.total() == 18);
        int count = 0;
        while (stream.next()) ++count;
        CHECK(count == 18);
    }
    SUBCASE("no monomials") {
        auto stream = combine_candidates({}, 3);
        CHECK(stream.total() == 0);
        CHECK_FALSE(stream.next());
    }
}

TEST_CASE("validate_structure") {
    CHECK(validate_structure(figure5()).accepted());
    CHECK(validate_structure(figure6()).accepted());

    const Monomial one{1, Rational(1)};
    CHECK(validate_structure(make_candidate({{one, Cycle({1})}, {one, Cycle({2})}}, 2)).reason ==
          Rejection::DisjointUnion);

    SUBCASE("three two-cycles on three vertices close extra cycles") {
        const Monomial two{2, Rational(1)};
        const auto c = make_candidate({{two, Cycle({1, 2})}, {two, Cycle({2, 3})}, {two, Cycle({1, 3})}}, 3);
        const auto all = testing::brute_force_cycles(c.union_graph);
        REQUIRE(all.size() == 5);  // three 2-cycles plus [1,2,3] and [1,3,2]
        CHECK(validate_structure(c).reason == Rejection::ExtraCycles);
    }
    SUBCASE("isolated vertex") {
        const auto c = make_candidate({{Monomial{1, 1}, Cycle({1})}, {Monomial{2, 1}, Cycle({1, 2})}}, 3);
        CHECK(validate_structure(c).reason == Rejection::Uncovered);
    }
}

TEST_CASE("solve_weights and build_matrix") {
    SUBCASE("figure 5 structure") {
        const auto w = solve_weights(figure5(), kReferenceMonomials);
        CHECK(w == WeightMap{{{1, 1}, Rational(1)}, {{1, 2}, Rational(1)}, {{2, 1}, Rational(2)}});
        CHECK(build_matrix(w, 2) == Matrix{{1, 2}, {1, 0}});
        CHECK(weight_equations(figure5()) == std::vector<std::string>{"w(1,1)=1", "w(1,2)·w(2,1)=2"});
    }
    SUBCASE("figure 6 structure") {
        const auto w = solve_weights(figure6(), kReferenceMonomials);
        CHECK(w == WeightMap{{{2, 2}, Rational(1)}, {{1, 2}, Rational(1)}, {{2, 1}, Rational(2)}});
        CHECK(build_matrix(w, 2) == Matrix{{0, 2}, {1, 1}});
        CHECK(weight_equations(figure6()) == std::vector<std::string>{"w(2,2)=1", "w(1,2)·w(2,1)=2"});
    }
    SUBCASE("single self-loop") {
        const Monomial five{1, Rational(5)};
        const auto w = solve_weights(make_candidate({{five, Cycle({1})}}, 1), {five});
        CHECK(w == WeightMap{{{1, 1}, Rational(5)}});
    }
    SUBCASE("empty weights") { CHECK(build_matrix({}, 2) == Matrix(2, 2)); }
    SUBCASE("shared arcs keep earlier weights") {
        // [1,2] and [1,2,3] share arc 1->2.
        const Monomial m2{2, Rational(3)};
        const Monomial m3{3, Rational(7, 2)};
        const auto c = make_candidate({{m2, Cycle({1, 2})}, {m3, Cycle({1, 2, 3})}}, 3);
        const auto w = solve_weights(c, {m2, m3});
        CHECK(w.at({1, 2}) == Rational(1));
        CHECK(w.at({2, 1}) == Rational(3));
        CHECK(w.at({2, 3}) == Rational(1));
        CHECK(w.at({3, 1}) == Rational(7, 2));
    }
    SUBCASE("conflict when every arc is already fixed") {
        // Not a valid structure: the three 2-cycles fix 1->2, 2->3 and 3->1
        // (product 2) before the 3-cycle that needs 5 is reached.
        const Monomial m2{2, Rational(2)};
        const Monomial m3{3, Rational(5)};
        const auto c = make_candidate(
            {{m2, Cycle({1, 2})}, {m2, Cycle({2, 3})}, {m2, Cycle({1, 3})}, {m3, Cycle({1, 2, 3})}}, 3);
        CHECK(error_code([&] { (void)solve_weights(c, {m2, m3}); }) == Errc::WeightConflict);
        const Monomial m3ok{3, Rational(2)};
        CHECK_NOTHROW((void)solve_weights(c, {m2, m3ok}));
    }
}

TEST_CASE("realize") {
    SUBCASE("reference characteristic polynomial") {
        const auto set = realize(CharPoly{2, 1});
        REQUIRE(set.realizations.size() == 2);
        CHECK(set.realizations[0].a == Matrix{{1, 2}, {1, 0}});
        CHECK(set.realizations[1].a == Matrix{{0, 2}, {1, 1}});
        CHECK(set.diagnostics.candidates_examined == 2);
        CHECK_FALSE(set.direct_term);
    }
    SUBCASE("reference transfer function carries D") {
        const auto set = realize(TransferFunction{ShiftedPoly{2, 5, 2}, ShiftedPoly{-2, -1, 1}});
        CHECK(set.direct_term == Rational(2));
        CHECK(set.realizations.size() == 2);
    }
    SUBCASE("all-zero coefficients") {
        const auto set = realize(CharPoly{0, 0, 0});
        CHECK(set.realizations.empty());
        CHECK(set.diagnostics.candidates_examined == 0);
    }
    SUBCASE("order three with every coefficient positive") {
        const CharPoly target{6, 11, 6};
        const auto set = realize(target);
        const auto expected = oracle::brute_force_structures(set.monomials, 3);
        REQUIRE(expected.size() == 12);  // loop on the 2-cycle (3 x 2) times two 3-cycle orientations
        CHECK(set.realizations.size() == expected.size());
        for (const auto& r : set.realizations) {
            CHECK(oracle::verify_realization(r.a, target));
            CHECK(oracle::char_poly_cofactor(r.a) == ShiftedPoly{-6, -11, -6, 1});
        }
        CHECK(set.diagnostics.candidates_examined == 18);
    }
    SUBCASE("missing constant term leaves vertices uncovered") {
        const auto set = realize(CharPoly{0, 1});
        CHECK(set.realizations.empty());
        CHECK(set.diagnostics.rejected_uncovered == 2);
    }
    SUBCASE("errors") {
        CHECK(error_code([] { (void)realize(CharPoly{-1, 1}); }) == Errc::NegativeCoefficient);
        CHECK(error_code([] { (void)realize(TransferFunction{ShiftedPoly{0, 0, 1}, ShiftedPoly{1, 1}}); }) ==
              Errc::NotProper);
        CHECK(error_code([] { (void)realize(CharPoly{1, 1, 1}, RealizeOptions{5}); }) ==
              Errc::EnumerationBudgetExceeded);
    }
}

TEST_CASE("property: every realization is sound, nonnegative and one cycle per monomial") {
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<std::size_t>(testing::uniform_int(1, 4));
        std::vector<Rational> d(n);
        for (auto& c : d) c = Rational(testing::uniform_int(0, 4), testing::uniform_int(1, 3));
        const CharPoly target(d);
        const auto set = realize(target);
        const auto again = realize(target);
        REQUIRE(again.realizations.size() == set.realizations.size());
        CHECK(again.diagnostics == set.diagnostics);

        std::set<WeightMap> distinct;
        for (std::size_t i = 0; i < set.realizations.size(); ++i) {
            const auto& r = set.realizations[i];
            CHECK(r.a == again.realizations[i].a);
            CHECK(r.a.rows() == n);
            CHECK(oracle::verify_realization(r.a, target));
            CHECK(check_positive_realization(r.a, Rational(1, 100)));
            distinct.insert(r.weights);

            const auto cycles = enumerate_simple_cycles(r.structure.union_graph);
            std::multiset<std::size_t> lengths, degrees;
            for (const auto& c : cycles) lengths.insert(c.length());
            for (const auto& m : set.monomials) degrees.insert(static_cast<std::size_t>(m.degree));
            CHECK(lengths == degrees);
        }
        CHECK(distinct.size() == set.realizations.size());
    }
}

TEST_CASE("check_positive_realization") {
    CHECK(check_positive_realization(Matrix{{1, 2}, {1, 0}}, Rational(1, 2)));
    CHECK(check_positive_realization(Matrix{{Rational(-1, 4), 0}, {0, 0}}, Rational(1, 2)));
    CHECK_FALSE(check_positive_realization(Matrix{{-1, 0}, {0, 0}}, Rational(1, 2)));
    CHECK_FALSE(check_positive_realization(Matrix{{0, -1}, {0, 0}}, Rational(1, 2)));
    for (const Rational& bad : {Rational(0), Rational(1), Rational(3, 2), Rational(-1, 2)}) {
        CHECK(error_code([&] { (void)check_positive_realization(Matrix{{1}}, bad); }) == Errc::AlphaOutOfRange);
    }
}

TEST_CASE("order-four structures agree with the exhaustive scan") {
    for (const CharPoly& target : {CharPoly{1, 1, 1, 1}, CharPoly{1, 0, 1, 1}, CharPoly{2, 0, 0, 1}, CharPoly{0, 1, 1, 1}}) {
        const auto set = realize(target);
        std::set<oracle::ArcStructure> got;
        for (const auto& r : set.realizations) {
            oracle::ArcStructure s;
            for (const auto& [arc, _] : r.weights) s.push_back(arc);
            got.insert(s);
        }
        CHECK(got == oracle::brute_force_structures(set.monomials, 4, {true}));
    }
}
