#include "apud/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace apud {

namespace {

auto is_integer_text(std::string_view s) -> bool
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (! std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

auto to_mpz(std::string_view s) -> mpz_class
{
    std::string t(s);
    if (! t.empty() && t[0] == '+')
        t.erase(0, 1);
    return mpz_class(t, 10);
}

}

static_assert(sizeof(long) == sizeof(std::int64_t), "GMP long conversions assume LP64");

Rational::Rational(std::int64_t value) :
    _value(static_cast<long>(value))
{
}

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    _value = mpq_class(static_cast<long>(num), static_cast<long>(den));
    _value.canonicalize();
}

Rational::Rational(mpq_class v) :
    _value(std::move(v))
{
    _value.canonicalize();
}

auto Rational::parse(std::string_view text) -> Rational
{
    while (! text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (! text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    auto slash = text.find('/');
    auto num_text = text.substr(0, slash);
    auto den_text = slash == std::string_view::npos ? std::string_view{ "1" } : text.substr(slash + 1);
    if (! is_integer_text(num_text) || ! is_integer_text(den_text) || den_text[0] == '-')
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

    auto den = to_mpz(den_text);
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator '" + std::string(text) + "'");
    return Rational(mpq_class(to_mpz(num_text), den));
}

auto Rational::str() const -> std::string
{
    if (_value.get_den() == 1)
        return _value.get_num().get_str();
    return _value.get_num().get_str() + "/" + _value.get_den().get_str();
}

auto Rational::to_double() const -> double
{
    return _value.get_d();
}

auto Rational::numerator() const -> mpz_class
{
    return _value.get_num();
}

auto Rational::denominator() const -> mpz_class
{
    return _value.get_den();
}

auto Rational::is_integer() const -> bool
{
    return _value.get_den() == 1;
}

auto Rational::sign() const -> int
{
    return sgn(_value);
}

auto Rational::abs() const -> Rational
{
    return Rational(mpq_class(::abs(_value)));
}

auto Rational::operator+=(const Rational & o) -> Rational &
{
    _value += o._value;
    return *this;
}

auto Rational::operator-=(const Rational & o) -> Rational &
{
    _value -= o._value;
    return *this;
}

auto Rational::operator*=(const Rational & o) -> Rational &
{
    _value *= o._value;
    return *this;
}

auto Rational::operator/=(const Rational & o) -> Rational &
{
    if (o._value == 0)
        throw std::domain_error("rational division by zero");
    _value /= o._value;
    return *this;
}

auto Rational::operator-() const -> Rational
{
    return Rational(mpq_class(-_value));
}

auto operator==(const Rational & a, const Rational & b) -> bool
{
    return a._value == b._value;
}

auto operator<=>(const Rational & a, const Rational & b) -> std::strong_ordering
{
    int c = cmp(a._value, b._value);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

auto operator<<(std::ostream & os, const Rational & r) -> std::ostream &
{
    return os << r.str();
}

auto floor(const Rational & r) -> mpz_class
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return q;
}

auto ceil(const Rational & r) -> mpz_class
{
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return q;
}

}
