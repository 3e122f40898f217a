#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <cstdlib>
#include <string>

namespace degdev {

using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Renders "p/q" with q > 0 and gcd(p,q) = 1 (boost::rational keeps it reduced).
inline std::string to_fraction_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Fixed-point decimal rendering, truncated toward zero.
inline std::string to_decimal_string(const Rational& r, int places = 6) {
    long long scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    long long num = r.numerator();
    long long den = r.denominator();
    bool neg = num < 0;
    if (neg) num = -num;
    long long whole = num / den;
    long long frac = (num % den) * scale / den;
    std::string s = (neg ? "-" : "") + std::to_string(whole);
    if (places > 0) {
        std::string f = std::to_string(frac);
        s += "." + std::string(places - f.size(), '0') + f;
    }
    return s;
}

}  // namespace degdev
