#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "quadboard/errors.hpp"

namespace quadboard {

using Integer = ::boost::multiprecision::cpp_int;

/// Exact rational, always in lowest terms with a positive denominator.
using Rational = ::boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return ::boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return ::boost::multiprecision::denominator(r); }

inline Integer gcd(const Integer& a, const Integer& b) { return ::boost::multiprecision::gcd(a, b); }

/// num/den for any nonzero den, sign moved to the numerator.
inline Rational ratio(const Integer& num, const Integer& den) {
    if (den == 0) throw invalid_parameter("zero denominator");
    return den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
}

/// Serializes as "num/den"; integers keep the "/1".
inline std::string to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "a/b", "a" or a decimal literal such as "-0.25" into an exact rational.
inline Rational parse_rational(std::string_view text) {
    auto bad = [&] { return invalid_parameter("not a rational number: '" + std::string(text) + "'"); };
    auto parse_int = [&](std::string_view s) -> Integer {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) throw bad();
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') throw bad();
        Integer v(std::string(s.substr(i)));
        return s[0] == '-' ? Integer(-v) : v;
    };
    if (text.empty()) throw bad();
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer den = parse_int(text.substr(slash + 1));
        if (den == 0) throw invalid_parameter("zero denominator in '" + std::string(text) + "'");
        return ratio(parse_int(text.substr(0, slash)), den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (whole == "-" || whole == "+" || whole.empty()) whole = "0";
        if (frac.empty()) return Rational(parse_int(whole));
        Integer scale = ::boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
        Integer f = parse_int(frac);
        if (f < 0) throw bad();
        Integer w = parse_int(whole);
        if (w < 0) w = -w;
        Rational value(w * scale + f, scale);
        return negative ? Rational(-value) : value;
    }
    return Rational(parse_int(text));
}

/// Floor of the square root for n >= 0, and whether n is a perfect square.
inline std::pair<Integer, bool> isqrt(const Integer& n) {
    if (n < 0) throw domain_error("isqrt of a negative integer");
    Integer rem;
    Integer root = ::boost::multiprecision::sqrt(n, rem);
    return {root, rem == 0};
}

/// Positive rational s with s*s == v, if v > 0 is the square of a rational.
inline std::optional<Rational> rational_square_root(const Rational& v) {
    if (v <= 0) return std::nullopt;
    auto [num_root, num_square] = isqrt(numerator(v));
    if (!num_square) return std::nullopt;
    auto [den_root, den_square] = isqrt(denominator(v));
    if (!den_square) return std::nullopt;
    return Rational(num_root, den_root);
}

/// Value as int64 when it fits.
inline std::optional<std::int64_t> to_int64(const Integer& v) {
    static const Integer lo = std::numeric_limits<std::int64_t>::min();
    static const Integer hi = std::numeric_limits<std::int64_t>::max();
    if (v < lo || v > hi) return std::nullopt;
    return v.convert_to<std::int64_t>();
}

} // namespace quadboard
