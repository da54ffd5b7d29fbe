#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace posreal {

/// Exact fraction with arbitrary-precision numerator and denominator.
///
/// Always stored in lowest terms with a positive denominator. Division by
/// zero throws std::domain_error.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT: implicit integer promotion is intended
    Rational(int value) : value_(value) {}   // NOLINT
    Rational(long num, long den);
    explicit Rational(mpq_class value);

    /// Parses "p", "-p", "p/q" or "-p/q" with decimal digits. Throws Error(ParseError).
    static Rational parse(std::string_view text);

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    int sign() const noexcept { return sgn(value_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const;

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const noexcept { return value_; }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Integer power with a nonnegative exponent.
Rational pow(const Rational& base, unsigned exponent);

using Vector = std::vector<Rational>;

}  // namespace posreal
