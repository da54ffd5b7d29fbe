#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "posreal/matrix.hpp"
#include "posreal/rational.hpp"

namespace posreal {

/// Fractional discrete-time system
///   x_{k+1} + sum_{j=1}^{k+1} (-1)^j binom(alpha, j) x_{k-j+1} = A x_k + B u_k
///   y_k = C x_k + D u_k
/// with exact rational data.
class FractionalSystem {
public:
    /// Throws DimensionMismatch for inconsistent shapes and AlphaOutOfRange
    /// unless 0 < alpha < 1.
    FractionalSystem(Matrix a, Matrix b, Matrix c, Matrix d, Rational alpha);

    const Matrix& a() const noexcept { return a_; }
    const Matrix& b() const noexcept { return b_; }
    const Matrix& c() const noexcept { return c_; }
    const Matrix& d() const noexcept { return d_; }
    const Rational& alpha() const noexcept { return alpha_; }

    std::size_t states() const noexcept { return a_.rows(); }
    std::size_t inputs() const noexcept { return b_.cols(); }
    std::size_t outputs() const noexcept { return c_.rows(); }

private:
    Matrix a_, b_, c_, d_;
    Rational alpha_;
};

struct Trajectory {
    std::vector<Vector> states;   // x_0 .. x_K
    std::vector<Vector> outputs;  // y_0 .. y_K
};

/// Generalized binomial coefficient alpha (alpha-1) ... (alpha-j+1) / j!.
Rational frac_binomial(const Rational& alpha, unsigned j);

/// (-1)^j binom(alpha, j), the weight of x_{k-j} in the fractional difference. j >= 1.
Rational gl_coefficient(const Rational& alpha, unsigned j);

struct SimulateOptions {
    /// Keep only the first `memory` history terms. Approximate; unset means full memory.
    std::optional<std::size_t> memory;
};

/// Runs K steps of the recursion keeping the whole state history.
///
/// u must hold at least K inputs; y_K uses u_K when present and a zero input
/// otherwise. Throws DimensionMismatch.
Trajectory simulate(const FractionalSystem& sys, const Vector& x0, const std::vector<Vector>& u, std::size_t k,
                    const SimulateOptions& options = {});

/// Same recursion regrouped as
///   x_{k+1} = (A + alpha I) x_k + sum_{j>=2} (-1)^{j+1} binom(alpha, j) x_{k-j+1} + B u_k.
/// Produces identical trajectories; kept as an independent cross-check.
Trajectory simulate_shifted(const FractionalSystem& sys, const Vector& x0, const std::vector<Vector>& u,
                            std::size_t k, const SimulateOptions& options = {});

bool check_internal_positivity(const Trajectory& t);

}  // namespace posreal
