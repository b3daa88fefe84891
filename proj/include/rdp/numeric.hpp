#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace rdp {

// All lattice arithmetic is exact. Int is an arbitrary-precision integer,
// Rat a normalized rational over it (positive denominator, lowest terms).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline int sign_of(const Int& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }
inline int sign_of(const Rat& v) { return sign_of(v.numerator()); }

// boost::rational's two-argument constructor rejects negative denominators
// for multiprecision integers; this is the safe quotient constructor.
inline Rat make_rat(Int num, Int den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return {std::move(num), std::move(den)};
}

// Mixed Rat/integer equality in boost 1.74 recurses forever under C++20's
// reversed-candidate rules. These deleted overloads outrank the boost
// templates inside this namespace, so such comparisons fail to compile;
// compare against an explicit Rat or test sign_of instead.
bool operator==(const Rat&, int) = delete;
bool operator==(const Rat&, long long) = delete;
bool operator==(const Rat&, const Int&) = delete;

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& v) {
    if (v.denominator() == 1) return v.numerator().str();
    return v.numerator().str() + "/" + v.denominator().str();
}

} // namespace rdp
