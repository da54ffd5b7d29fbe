#include "posreal/fractional_sim.hpp"

#include <algorithm>
#include <string>

#include "posreal/error.hpp"

namespace posreal {

FractionalSystem::FractionalSystem(Matrix a, Matrix b, Matrix c, Matrix d, Rational alpha)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), alpha_(std::move(alpha)) {
    if (!a_.is_square()) throw Error(Errc::DimensionMismatch, "A must be square");
    if (b_.rows() != a_.rows() || c_.cols() != a_.rows() || d_.rows() != c_.rows() || d_.cols() != b_.cols()) {
        throw Error(Errc::DimensionMismatch, "inconsistent A, B, C, D shapes");
    }
    if (alpha_.sign() <= 0 || alpha_ >= Rational(1)) {
        throw Error(Errc::AlphaOutOfRange, "alpha = " + alpha_.to_string() + " must satisfy 0 < alpha < 1");
    }
}

Rational frac_binomial(const Rational& alpha, unsigned j) {
    Rational out(1);
    for (unsigned i = 0; i < j; ++i) {
        out *= alpha - Rational(static_cast<long>(i));
        out /= Rational(static_cast<long>(i) + 1);
    }
    return out;
}

Rational gl_coefficient(const Rational& alpha, unsigned j) {
    const Rational b = frac_binomial(alpha, j);
    return j % 2 == 0 ? b : -b;
}

namespace {

void check_inputs(const FractionalSystem& sys, const Vector& x0, const std::vector<Vector>& u, std::size_t k) {
    if (x0.size() != sys.states()) throw Error(Errc::DimensionMismatch, "x0 has the wrong dimension");
    if (u.size() < k) {
        throw Error(Errc::DimensionMismatch, "need " + std::to_string(k) + " inputs, got " + std::to_string(u.size()));
    }
    for (const Vector& uk : u) {
        if (uk.size() != sys.inputs()) throw Error(Errc::DimensionMismatch, "input vector has the wrong dimension");
    }
}

std::vector<Rational> gl_table(const Rational& alpha, std::size_t upto) {
    std::vector<Rational> gl(upto + 1);
    Rational binom(1);
    for (std::size_t j = 1; j <= upto; ++j) {
        binom *= alpha - Rational(static_cast<long>(j - 1));
        binom /= Rational(static_cast<long>(j));
        gl[j] = j % 2 == 0 ? binom : -binom;
    }
    return gl;
}

std::size_t history_depth(std::size_t step, const SimulateOptions& options) {
    return options.memory ? std::min(step + 1, *options.memory) : step + 1;
}

void fill_outputs(const FractionalSystem& sys, const std::vector<Vector>& u, Trajectory& t) {
    const Vector zero(sys.inputs());
    t.outputs.reserve(t.states.size());
    for (std::size_t i = 0; i < t.states.size(); ++i) {
        const Vector& ui = i < u.size() ? u[i] : zero;
        t.outputs.push_back(sys.c() * t.states[i] + sys.d() * ui);
    }
}

}  // namespace

Trajectory simulate(const FractionalSystem& sys, const Vector& x0, const std::vector<Vector>& u, std::size_t k,
                    const SimulateOptions& options) {
    check_inputs(sys, x0, u, k);
    const auto gl = gl_table(sys.alpha(), k);
    Trajectory t;
    t.states.reserve(k + 1);
    t.states.push_back(x0);
    for (std::size_t step = 0; step < k; ++step) {
        Vector next = sys.a() * t.states[step] + sys.b() * u[step];
        const std::size_t depth = history_depth(step, options);
        for (std::size_t j = 1; j <= depth; ++j) {
            next = next - gl[j] * t.states[step + 1 - j];
        }
        t.states.push_back(std::move(next));
    }
    fill_outputs(sys, u, t);
    return t;
}

Trajectory simulate_shifted(const FractionalSystem& sys, const Vector& x0, const std::vector<Vector>& u,
                            std::size_t k, const SimulateOptions& options) {
    check_inputs(sys, x0, u, k);
    const Matrix shifted = sys.a() + sys.alpha() * Matrix::identity(sys.states());
    Trajectory t;
    t.states.reserve(k + 1);
    t.states.push_back(x0);
    Rational binom = frac_binomial(sys.alpha(), 1);
    std::vector<Rational> memory_weight{Rational(), Rational()};  // (-1)^{j+1} binom(alpha, j), j >= 2
    for (std::size_t j = 2; j <= k; ++j) {
        binom = binom * (sys.alpha() - Rational(static_cast<long>(j - 1))) / Rational(static_cast<long>(j));
        memory_weight.push_back(j % 2 == 0 ? -binom : binom);
    }
    for (std::size_t step = 0; step < k; ++step) {
        Vector next = shifted * t.states[step] + sys.b() * u[step];
        const std::size_t depth = history_depth(step, options);
        for (std::size_t j = 2; j <= depth; ++j) {
            next = next + memory_weight[j] * t.states[step + 1 - j];
        }
        t.states.push_back(std::move(next));
    }
    fill_outputs(sys, u, t);
    return t;
}

bool check_internal_positivity(const Trajectory& t) {
    auto nonneg = [](const Vector& v) { return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.sign() >= 0; }); };
    return std::all_of(t.states.begin(), t.states.end(), nonneg) && std::all_of(t.outputs.begin(), t.outputs.end(), nonneg);
}

}  // namespace posreal
