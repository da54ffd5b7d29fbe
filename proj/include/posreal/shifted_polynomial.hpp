#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "posreal/rational.hpp"

namespace posreal {

/// Polynomial in the shifted indeterminate lambda = (z - c_alpha), which is
/// treated as a single opaque symbol throughout.
///
/// Coefficients are indexed by power, ascending from lambda^0. Trailing zeros
/// are trimmed on construction, so the zero polynomial has no coefficients
/// and degree() == -1.
class ShiftedPoly {
public:
    ShiftedPoly() = default;
    explicit ShiftedPoly(std::vector<Rational> coeffs);
    ShiftedPoly(std::initializer_list<Rational> coeffs) : ShiftedPoly(std::vector<Rational>(coeffs)) {}

    static ShiftedPoly monomial(const Rational& coeff, std::size_t power);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Coefficient of lambda^power; zero past the degree.
    Rational coeff(std::size_t power) const;
    Rational leading() const;
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    friend ShiftedPoly operator+(const ShiftedPoly& a, const ShiftedPoly& b);
    friend ShiftedPoly operator-(const ShiftedPoly& a, const ShiftedPoly& b);
    friend bool operator==(const ShiftedPoly&, const ShiftedPoly&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

ShiftedPoly poly_mul(const ShiftedPoly& a, const ShiftedPoly& b);

struct PolyDivision {
    ShiftedPoly quotient;
    ShiftedPoly remainder;
};

/// a = quotient * b + remainder with deg(remainder) < deg(b).
/// Throws Error(DivisionByZeroPoly) when b is zero.
PolyDivision poly_divmod(const ShiftedPoly& a, const ShiftedPoly& b);

/// Characteristic polynomial d(lambda^-1) = 1 - d_{n-1} lambda^-1 - ... - d_0 lambda^-n,
/// i.e. the monic lambda^n - d_{n-1} lambda^{n-1} - ... - d_0.
///
/// The d_i are the negated tail coefficients of the monic denominator, so a
/// positive realization requires every d_i >= 0. d_n = 1 is implicit.
class CharPoly {
public:
    CharPoly() = default;
    /// d[i] is d_i for i = 0..n-1; n = d.size() must be positive.
    explicit CharPoly(std::vector<Rational> d);
    CharPoly(std::initializer_list<Rational> d) : CharPoly(std::vector<Rational>(d)) {}

    /// Requires a monic denominator of degree >= 1 (Errc::NotMonic otherwise).
    static CharPoly from_denominator(const ShiftedPoly& denominator);

    ShiftedPoly to_denominator() const;

    std::size_t order() const noexcept { return d_.size(); }
    const Rational& d(std::size_t i) const { return d_.at(i); }
    const std::vector<Rational>& coefficients() const noexcept { return d_; }

    friend bool operator==(const CharPoly&, const CharPoly&) = default;

private:
    std::vector<Rational> d_;
};

/// One term d_{n-k} lambda^{-k} of the decomposed characteristic polynomial.
struct Monomial {
    int degree = 0;
    Rational coefficient;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct TransferFunction {
    ShiftedPoly numerator;
    ShiftedPoly denominator;
};

struct NormalizedTransfer {
    /// b[k] multiplies lambda^-k, i.e. b_n, b_{n-1}, ..., b_0.
    std::vector<Rational> b;
    CharPoly denominator;
};

/// Divides numerator and denominator by lambda^n.
/// Throws NotProper when deg(num) > deg(den), NotMonic for a non-monic
/// denominator or one of degree < 1.
NormalizedTransfer normalize_negative_powers(const TransferFunction& t);

struct DirectTerm {
    Rational d;
    /// Same layout as NormalizedTransfer::b; the lambda^0 entry is always zero.
    std::vector<Rational> strictly_proper_numerator;
};

/// D = lim T as lambda -> infinity, and the numerator of T - D over the same denominator.
DirectTerm extract_direct_term(const TransferFunction& t);

/// One monomial per strictly positive d_i, ascending by degree.
/// Throws Errc::NegativeCoefficient when any d_i < 0.
std::vector<Monomial> decompose_monomials(const CharPoly& p);

}  // namespace posreal
