#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "charid/errors.hpp"

namespace charid {

// Arbitrary-precision integers and rationals. cpp_rational keeps values in
// lowest terms with a positive denominator, which is exactly the canonical
// form required here.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denom(const Rational& q) { return boost::multiprecision::denominator(q); }

/// num/den with any signs; boost's two-argument constructor insists on a
/// positive denominator.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

inline long long to_ll(const Integer& n) {
    static const Integer lo = std::numeric_limits<long long>::min();
    static const Integer hi = std::numeric_limits<long long>::max();
    if (n < lo || n > hi) throw OverflowError("integer does not fit in 64 bits: " + n.str());
    return n.convert_to<long long>();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline bool is_integer(const Rational& q) { return denom(q) == 1; }

/// True when 2q is an integer.
inline bool is_half_integer(const Rational& q) { return is_integer(q * 2); }

inline long long checked_lcm(long long a, long long b, long long limit) {
    long long g = std::gcd(a, b);
    long long l = (a / g) * b;  // a,b > 0
    if (l <= 0 || l > limit || (a / g) != l / b)
        throw OverflowError("lcm(" + std::to_string(a) + ", " + std::to_string(b) + ") exceeds bound");
    return l;
}

inline long long euler_phi(long long n) {
    long long result = n;
    long long m = n;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

/// Parses "p/q" or "p" with optional sign. Throws ConfigError on junk.
inline Rational parse_rational(const std::string& text) {
    auto fail = [&] { throw ConfigError("cannot parse rational '" + text + "'"); };
    std::string s = text;
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
    if (s.empty()) fail();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw DivisionByZero("zero denominator in '" + text + "'");
        return make_rational(std::move(num), std::move(den));
    } catch (const std::runtime_error&) {
        fail();
    }
    return Rational();  // unreachable
}

inline std::string rational_str(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

/// Splits "a,b,c" into rationals; used by the point/weight flag grammar.
inline std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw ConfigError("empty rational list '" + text + "'");
    return out;
}

}  // namespace charid
