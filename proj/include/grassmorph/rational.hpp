#ifndef GRASSMORPH_RATIONAL_HPP
#define GRASSMORPH_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "grassmorph/errors.hpp"

namespace grassmorph {

// Exact scalars. All core computation runs over Q; cpp_rational keeps
// values in lowest terms with a positive denominator, which is exactly the
// invariant the rest of the library relies on.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Combined bit length of numerator and denominator; the pivot-selection
/// cost measure for exact elimination.
inline unsigned bit_length(const BigInt& v) {
    if (v == 0) return 0;
    return static_cast<unsigned>(boost::multiprecision::msb(boost::multiprecision::abs(v))) + 1;
}

inline unsigned bit_length(const Rational& r) {
    return bit_length(numerator(r)) + bit_length(denominator(r));
}

inline Rational rat_pow(const Rational& base, unsigned exp) {
    Rational acc(1);
    Rational b = base;
    unsigned e = exp;
    while (e > 0) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

/// Render as "num" or "num/den".
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (!is_integer(r)) s += "/" + denominator(r).str();
    return s;
}

/// Parse "num" or "num/den" (den > 0 after normalization).
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw ParseError("bad rational '" + text + "': " + e.what());
    }
}

} // namespace grassmorph

#endif
