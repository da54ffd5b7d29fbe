#include "posreal/shifted_polynomial.hpp"

#include <algorithm>
#include <string>

#include "posreal/error.hpp"

namespace posreal {

ShiftedPoly::ShiftedPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ShiftedPoly ShiftedPoly::monomial(const Rational& coeff, std::size_t power) {
    std::vector<Rational> c(power + 1);
    c[power] = coeff;
    return ShiftedPoly(std::move(c));
}

void ShiftedPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational ShiftedPoly::coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational();
}

Rational ShiftedPoly::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

ShiftedPoly operator+(const ShiftedPoly& a, const ShiftedPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return ShiftedPoly(std::move(c));
}

ShiftedPoly operator-(const ShiftedPoly& a, const ShiftedPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return ShiftedPoly(std::move(c));
}

ShiftedPoly poly_mul(const ShiftedPoly& a, const ShiftedPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<Rational> c(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j) c[i + j] += x[i] * y[j];
    }
    return ShiftedPoly(std::move(c));
}

PolyDivision poly_divmod(const ShiftedPoly& a, const ShiftedPoly& b) {
    if (b.is_zero()) throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial");
    if (a.degree() < b.degree()) return {ShiftedPoly(), a};

    std::vector<Rational> rem = a.coeffs();
    const auto& div = b.coeffs();
    const std::size_t db = div.size() - 1;
    std::vector<Rational> quot(rem.size() - db);
    const Rational lead = div.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Rational q = rem[k + db] / lead;
        quot[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * div[j];
    }
    rem.resize(db);
    return {ShiftedPoly(std::move(quot)), ShiftedPoly(std::move(rem))};
}

CharPoly::CharPoly(std::vector<Rational> d) : d_(std::move(d)) {
    if (d_.empty()) throw Error(Errc::InvalidDegree, "characteristic polynomial must have order >= 1");
}

CharPoly CharPoly::from_denominator(const ShiftedPoly& denominator) {
    if (denominator.degree() < 1) {
        throw Error(Errc::NotMonic, "denominator must have degree >= 1");
    }
    if (denominator.leading() != Rational(1)) {
        throw Error(Errc::NotMonic, "denominator leading coefficient is " + denominator.leading().to_string() +
                                        ", expected 1");
    }
    std::vector<Rational> d(static_cast<std::size_t>(denominator.degree()));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = -denominator.coeff(i);
    return CharPoly(std::move(d));
}

ShiftedPoly CharPoly::to_denominator() const {
    std::vector<Rational> c(d_.size() + 1);
    for (std::size_t i = 0; i < d_.size(); ++i) c[i] = -d_[i];
    c.back() = 1;
    return ShiftedPoly(std::move(c));
}

NormalizedTransfer normalize_negative_powers(const TransferFunction& t) {
    CharPoly d = CharPoly::from_denominator(t.denominator);
    const int n = t.denominator.degree();
    if (t.numerator.degree() > n) {
        throw Error(Errc::NotProper, "numerator degree " + std::to_string(t.numerator.degree()) +
                                         " exceeds denominator degree " + std::to_string(n));
    }
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) b[static_cast<std::size_t>(k)] = t.numerator.coeff(static_cast<std::size_t>(n - k));
    return {std::move(b), std::move(d)};
}

DirectTerm extract_direct_term(const TransferFunction& t) {
    NormalizedTransfer norm = normalize_negative_powers(t);
    const std::size_t n = norm.denominator.order();
    DirectTerm out{norm.b.front(), std::vector<Rational>(n + 1)};
    // Normalized denominator is 1 - sum_k d_{n-k} lambda^-k.
    for (std::size_t k = 1; k <= n; ++k) {
        out.strictly_proper_numerator[k] = norm.b[k] + out.d * norm.denominator.d(n - k);
    }
    return out;
}

std::vector<Monomial> decompose_monomials(const CharPoly& p) {
    const std::size_t n = p.order();
    for (std::size_t i = 0; i < n; ++i) {
        if (p.d(i).sign() < 0) {
            throw Error(Errc::NegativeCoefficient,
                        "coefficient d_" + std::to_string(i) + " = " + p.d(i).to_string() +
                            " is negative; a positive realization requires d_i >= 0 for every i");
        }
    }
    std::vector<Monomial> out;
    for (std::size_t k = 1; k <= n; ++k) {
        const Rational& c = p.d(n - k);
        if (c.sign() > 0) out.push_back({static_cast<int>(k), c});
    }
    return out;
}

}  // namespace posreal
