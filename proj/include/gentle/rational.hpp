// Exact scalar types used throughout: arbitrary-precision integers and
// rationals (boost::multiprecision), plus small parsing/printing helpers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <string>

namespace gentle {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

// true iff q = +/- 2^k / 1 or +/- 1 / 2^k times an odd integer... no:
// true iff the denominator of q (in lowest terms) is a power of two.
inline bool denominator_is_power_of_two(const Rat& q) {
    Int d = den(q);
    while (d % 2 == 0) d /= 2;
    return d == 1;
}

inline bool is_pm_power_of_two(const Int& v) {
    Int a = v < 0 ? Int(-v) : v;
    if (a == 0) return false;
    while (a % 2 == 0) a /= 2;
    return a == 1;
}

inline std::string to_string(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

inline std::string to_string(const Int& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace gentle
