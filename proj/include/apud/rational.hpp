#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace apud {

/// Exact rational number in canonical (reduced, positive denominator) form.
///
/// Thin value wrapper over GMP's mpq_class so the rest of the code never
/// touches GMP directly. Text form is "num/den", or just "num" for integers.
class Rational
{
public:
    Rational() = default;
    Rational(std::int64_t value); // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    /// Parses "a", "-a", "a/b". Throws std::invalid_argument on malformed text
    /// or a zero denominator.
    static auto parse(std::string_view text) -> Rational;

    [[nodiscard]] auto str() const -> std::string;
    [[nodiscard]] auto to_double() const -> double;

    [[nodiscard]] auto numerator() const -> mpz_class;
    [[nodiscard]] auto denominator() const -> mpz_class;
    [[nodiscard]] auto is_integer() const -> bool;
    [[nodiscard]] auto sign() const -> int;
    [[nodiscard]] auto abs() const -> Rational;

    auto operator+=(const Rational & o) -> Rational &;
    auto operator-=(const Rational & o) -> Rational &;
    auto operator*=(const Rational & o) -> Rational &;
    auto operator/=(const Rational & o) -> Rational &;

    friend auto operator+(Rational a, const Rational & b) -> Rational { return a += b; }
    friend auto operator-(Rational a, const Rational & b) -> Rational { return a -= b; }
    friend auto operator*(Rational a, const Rational & b) -> Rational { return a *= b; }
    friend auto operator/(Rational a, const Rational & b) -> Rational { return a /= b; }
    auto operator-() const -> Rational;

    friend auto operator==(const Rational & a, const Rational & b) -> bool;
    friend auto operator<=>(const Rational & a, const Rational & b) -> std::strong_ordering;

    [[nodiscard]] auto raw() const -> const mpq_class & { return _value; }

private:
    explicit Rational(mpq_class v);
    mpq_class _value;
};

auto operator<<(std::ostream & os, const Rational & r) -> std::ostream &;

/// Floor of a rational as an exact integer.
auto floor(const Rational & r) -> mpz_class;
/// Ceiling of a rational as an exact integer.
auto ceil(const Rational & r) -> mpz_class;

}
