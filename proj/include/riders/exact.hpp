#pragma once

// Exact integer and rational types shared by every module.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace riders {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational to_rational(const Integer& n) { return Rational(n); }

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

// Throws when r is not an integer; used where a formula must divide exactly.
inline Integer exact_integer(const Rational& r, const char* what)
{
    if (!is_integer(r))
        throw std::logic_error(std::string(what) + ": inexact division, got " + r.str());
    return boost::multiprecision::numerator(r);
}

inline std::string to_string(const Integer& n) { return n.str(); }

// "num/den" with den > 0; integers render without a denominator.
inline std::string to_string(const Rational& r)
{
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

inline Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(Integer(text));
    Integer den(text.substr(slash + 1));
    if (den <= 0)
        throw std::invalid_argument("rational denominator must be positive: " + text);
    return Rational(Integer(text.substr(0, slash)), den);
}

inline Integer pow2(std::int64_t e)
{
    if (e < 0)
        throw std::domain_error("pow2: negative exponent");
    return Integer(1) << static_cast<unsigned>(e);
}

// n^e with 0^0 = 1.
inline Integer ipow(const Integer& n, std::int64_t e)
{
    if (e < 0)
        throw std::domain_error("ipow: negative exponent");
    return boost::multiprecision::pow(n, static_cast<unsigned>(e));
}

inline Integer factorial(std::int64_t n)
{
    if (n < 0)
        throw std::domain_error("factorial: negative argument");
    Integer f = 1;
    for (std::int64_t i = 2; i <= n; ++i)
        f *= i;
    return f;
}

} // namespace riders
