#ifndef MOONSHINE_RATIONAL_HPP
#define MOONSHINE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace moonshine {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline std::string to_string(const Int& n) { return n.str(); }
inline std::string to_string(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Binomial coefficient C(n, k) as an exact integer.
inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (unsigned long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

} // namespace moonshine

#endif
