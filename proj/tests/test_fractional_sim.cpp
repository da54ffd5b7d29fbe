#include "doctest.h"
#include "posreal/error.hpp"
#include "posreal/fractional_sim.hpp"
#include "support.hpp"

using namespace posreal;

namespace {

FractionalSystem scalar_system(const Rational& a, const Rational& alpha) {
    return FractionalSystem(Matrix{{a}}, Matrix{{0}}, Matrix{{1}}, Matrix{{0}}, alpha);
}

std::vector<Vector> zero_inputs(std::size_t k, std::size_t m = 1) { return std::vector<Vector>(k, Vector(m)); }

Vector random_nonneg(std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = Rational(testing::uniform_int(0, 5), testing::uniform_int(1, 4));
    return v;
}

}  // namespace

TEST_CASE("frac_binomial") {
    CHECK(frac_binomial(Rational(1, 3), 0) == Rational(1));
    CHECK(frac_binomial(Rational(1, 2), 1) == Rational(1, 2));
    CHECK(frac_binomial(Rational(1, 2), 2) == Rational(-1, 8));
    // Integer alpha reduces to the ordinary binomial coefficient.
    CHECK(frac_binomial(Rational(5), 2) == Rational(10));
    CHECK(frac_binomial(Rational(3), 4) == Rational(0));
}

TEST_CASE("gl_coefficient") {
    CHECK(gl_coefficient(Rational(1, 2), 1) == Rational(-1, 2));
    CHECK(gl_coefficient(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(gl_coefficient(Rational(1, 3), 5).sign() < 0);
}

TEST_CASE("property: memory weights (-1)^{j+1} binom(alpha, j) are positive") {
    for (long q = 2; q <= 12; ++q) {
        for (long p = 1; p < q; ++p) {
            const Rational alpha(p, q);
            for (unsigned j = 1; j <= 64; ++j) {
                const Rational b = frac_binomial(alpha, j);
                CHECK((j % 2 == 1 ? b : -b).sign() > 0);
                // Equivalently every gl coefficient is negative.
                CHECK(gl_coefficient(alpha, j).sign() < 0);
            }
        }
    }
}

TEST_CASE("FractionalSystem validates its data") {
    auto code = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        FAIL("expected an error");
        return Errc::ParseError;
    };
    CHECK(code([] { (void)scalar_system(0, Rational(0)); }) == Errc::AlphaOutOfRange);
    CHECK(code([] { (void)scalar_system(0, Rational(1)); }) == Errc::AlphaOutOfRange);
    CHECK(code([] { (void)FractionalSystem(Matrix(2, 2), Matrix(1, 1), Matrix(1, 2), Matrix(1, 1), Rational(1, 2)); }) ==
          Errc::DimensionMismatch);
    const auto sys = scalar_system(0, Rational(1, 2));
    CHECK(code([&] { (void)simulate(sys, Vector{1, 2}, zero_inputs(3), 3); }) == Errc::DimensionMismatch);
    CHECK(code([&] { (void)simulate(sys, Vector{1}, zero_inputs(2), 3); }) == Errc::DimensionMismatch);
}

TEST_CASE("simulate") {
    SUBCASE("zero dynamics") {
        const FractionalSystem sys(Matrix{{1, 2}, {1, 0}}, Matrix(2, 1), Matrix(1, 2), Matrix(1, 1), Rational(1, 2));
        const auto t = simulate(sys, Vector(2), zero_inputs(10), 10);
        REQUIRE(t.states.size() == 11);
        for (const auto& x : t.states) CHECK(x == Vector(2));
        CHECK(check_internal_positivity(t));
    }
    SUBCASE("two hand-unrolled steps") {
        const auto t = simulate(scalar_system(0, Rational(1, 2)), Vector{1}, zero_inputs(2), 2);
        CHECK(t.states[1] == Vector{Rational(1, 2)});
        CHECK(t.states[2] == Vector{Rational(3, 8)});
        CHECK(t.outputs[2] == Vector{Rational(3, 8)});
    }
    SUBCASE("outputs include the feedthrough term") {
        const FractionalSystem sys(Matrix{{0}}, Matrix{{1}}, Matrix{{2}}, Matrix{{3}}, Rational(1, 2));
        const auto t = simulate(sys, Vector{1}, {Vector{5}, Vector{7}}, 2);
        // x1 = alpha x0 + u0
        CHECK(t.states[1] == Vector{Rational(11, 2)});
        CHECK(t.outputs[0] == Vector{Rational(2 + 15)});
        CHECK(t.outputs[1] == Vector{Rational(11 + 21)});
        // y_K has no u_K supplied, so the feedthrough uses a zero input.
        CHECK(t.outputs[2] == Vector{Rational(2) * t.states[2][0]});
    }
}

TEST_CASE("property: regrouped recursion matches the direct form exactly") {
    for (int trial = 0; trial < 30; ++trial) {
        const auto n = static_cast<std::size_t>(testing::uniform_int(1, 3));
        const Rational alpha(testing::uniform_int(1, 6), 7);
        Matrix b(n, 1);
        for (std::size_t i = 0; i < n; ++i) b(i, 0) = testing::random_rational();
        const FractionalSystem sys(testing::random_matrix(n), b, Matrix(1, n), Matrix(1, 1), alpha);
        const std::size_t k = 15;
        std::vector<Vector> u;
        for (std::size_t i = 0; i < k; ++i) u.push_back(Vector{testing::random_rational()});
        Vector x0(n);
        for (auto& x : x0) x = testing::random_rational();
        const auto direct = simulate(sys, x0, u, k);
        CHECK(direct.states == simulate_shifted(sys, x0, u, k).states);
        const SimulateOptions shallow{std::size_t{3}};
        CHECK(simulate(sys, x0, u, k, shallow).states == simulate_shifted(sys, x0, u, k, shallow).states);
    }
}

TEST_CASE("memory depth one reduces to the classical shifted system") {
    const Rational alpha(2, 5);
    const Matrix a{{1, 2}, {1, 0}};
    const Matrix b{{1}, {0}};
    const FractionalSystem sys(a, b, Matrix{{1, 0}}, Matrix{{0}}, alpha);
    const Matrix shifted = a + alpha * Matrix::identity(2);
    std::vector<Vector> u;
    for (long i = 0; i < 8; ++i) u.push_back(Vector{Rational(i % 3)});
    const auto t = simulate(sys, Vector{1, 1}, u, 8, SimulateOptions{std::size_t{1}});
    Vector x{1, 1};
    for (std::size_t k = 0; k < 8; ++k) {
        x = shifted * x + b * u[k];
        CHECK(t.states[k + 1] == x);
    }
    // Full memory differs once history terms kick in.
    CHECK(simulate(sys, Vector{1, 1}, u, 8).states[2] != t.states[2]);
}

TEST_CASE("property: nonnegative data on a reference realization stays nonnegative") {
    const Matrix a{{1, 2}, {1, 0}};
    for (int trial = 0; trial < 20; ++trial) {
        const Rational alpha(testing::uniform_int(1, 8), 9);
        const FractionalSystem sys(a, Matrix{{1}, {0}}, Matrix{{1, 0}}, Matrix{{2}}, alpha);
        std::vector<Vector> u;
        for (int i = 0; i < 20; ++i) u.push_back(random_nonneg(1));
        const auto t = simulate(sys, random_nonneg(2), u, 20);
        CHECK(check_internal_positivity(t));
    }
}

TEST_CASE("property: A + alpha I nonnegative keeps trajectories nonnegative") {
    for (int trial = 0; trial < 20; ++trial) {
        const Rational alpha(testing::uniform_int(1, 4), 5);
        Matrix a(2, 2);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) a(i, j) = Rational(testing::uniform_int(0, 3), 2);
            a(i, i) -= alpha * Rational(testing::uniform_int(0, 1));  // diagonal may dip to -alpha
        }
        const FractionalSystem sys(a, Matrix{{1}, {1}}, Matrix{{1, 1}}, Matrix{{0}}, alpha);
        std::vector<Vector> u;
        for (int i = 0; i < 15; ++i) u.push_back(random_nonneg(1));
        CHECK(check_internal_positivity(simulate(sys, random_nonneg(2), u, 15)));
    }
}

TEST_CASE("check_internal_positivity") {
    CHECK(check_internal_positivity(Trajectory{{Vector(2)}, {Vector(1)}}));
    CHECK_FALSE(check_internal_positivity(Trajectory{{Vector{0, -1}}, {Vector(1)}}));
    CHECK_FALSE(check_internal_positivity(Trajectory{{Vector(2)}, {Vector{-1}}}));
}
