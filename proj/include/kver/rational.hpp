#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kver {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with positive denominator.
/// There is no floating point anywhere in the verification path.
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long long n, long long d = 1) {
    if (d == 0) throw std::invalid_argument("rat: zero denominator");
    return Rat(Int(n), Int(d));
}

inline int sgn(const Rat& x) { return x.sign(); }

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a > b ? a : b; }

/// Serializes as "p/q", with "/q" omitted when q == 1.
inline std::string to_string(const Rat& x) { return x.str(); }

Rat rat_parse(std::string_view s);

/// Lowest-terms / positive-denominator check.  The backing representation
/// maintains this as a class invariant; exposed so debug paths can assert it
/// after composite operations.
inline bool is_canonical(const Rat& x) {
    return denominator(x) > 0 && gcd(numerator(x), denominator(x)) == 1;
}

/// Truncated decimal expansion with `digits` fractional digits.
/// Approximate, for human-readable output only.
std::string to_decimal(const Rat& x, int digits = 20);

/// Exact square root when one exists.
bool try_exact_sqrt(const Rat& x, Rat& out);

// -- inline implementations -------------------------------------------------

inline Rat rat_parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
    try {
        return Rat(std::string(s));
    } catch (const std::exception&) {
        throw std::invalid_argument("rat_parse: bad rational '" + std::string(s) + "'");
    }
}

inline std::string to_decimal(const Rat& x, int digits) {
    Int n = numerator(x), d = denominator(x);
    std::string out;
    if (n < 0) {
        out += '-';
        n = -n;
    }
    Int ip = n / d;
    Int rem = n % d;
    out += ip.str();
    if (digits <= 0) return out;
    out += '.';
    for (int i = 0; i < digits; ++i) {
        rem *= 10;
        Int digit = rem / d;
        rem %= d;
        out += static_cast<char>('0' + static_cast<int>(digit));
    }
    return out;
}

inline bool try_exact_sqrt(const Rat& x, Rat& out) {
    if (x < 0) return false;
    // sqrt(p/q) = sqrt(p*q)/q is rational iff p*q is a perfect square.
    Int p = numerator(x), q = denominator(x);
    Int pq = p * q;
    Int r = sqrt(pq);
    if (r * r != pq) return false;
    out = Rat(r, q);
    return true;
}

} // namespace kver
