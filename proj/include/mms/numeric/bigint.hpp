#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mms {

// Arbitrary-precision signed integer. cpp_int keeps small values on the
// stack, which matters here: most coefficients stay well under 128 bits.
using BigInt = boost::multiprecision::cpp_int;

inline int sign_of(const BigInt& v) { return v.sign(); }

inline BigInt abs_of(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

inline BigInt gcd_of(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

// Smallest k with 2^k >= v (v >= 1).
inline unsigned ceil_log2(const BigInt& v) {
    unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(v));
    BigInt pow2 = BigInt(1) << bits;
    return pow2 == v ? bits : bits + 1;
}

}  // namespace mms
