#pragma once

// Exact integer / rational scalar types.  Everything downstream (polynomials,
// matrices, determinants) is built on these; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace a2zeta {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return boost::multiprecision::gcd(a, b);
}

inline std::string to_string(const Int& v) { return v.str(); }

inline Int int_from_string(const std::string& s) { return Int(s); }

inline int sign_of(const Int& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }

}  // namespace a2zeta
