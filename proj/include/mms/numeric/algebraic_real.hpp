#pragma once

#include <compare>
#include <string>

#include "mms/numeric/polynomial.hpp"
#include "mms/numeric/rational.hpp"

namespace mms {

// Real algebraic number: an exact rational, or the unique root of a
// square-free polynomial inside an open interval whose endpoints are not
// roots.  Plain value type: refinement narrows the interval in place but
// never changes the represented value, so handing out copies is always safe.
// The refining operations below are cheaper than their const counterparts
// (which work on internal copies and throw the refinement away); prefer them
// when the caller owns a mutable value.
class AlgebraicReal {
public:
    AlgebraicReal() : AlgebraicReal(Rational(0)) {}
    AlgebraicReal(Rational v);  // NOLINT: implicit from exact rational
    // The unique root of poly in (lo, hi).  poly must be square-free and
    // change sign over the interval; it is canonicalized internally.
    AlgebraicReal(IntPolynomial poly, Rational lo, Rational hi);

    bool is_rational() const { return lo_ == hi_; }
    const Rational& rational_value() const { return lo_; }  // requires is_rational()
    const Rational& lower() const { return lo_; }
    const Rational& upper() const { return hi_; }
    const IntPolynomial& poly() const { return poly_; }

    void refine();  // one bisection step (no-op once rational)
    void refine_below(const Rational& width);

    // Collapses to the exact rational on equality.
    std::strong_ordering compare_to(const Rational& q);

    int sign();
    int sign() const { return AlgebraicReal(*this).sign(); }

    double to_double() const;
    std::string to_string() const;

    friend std::strong_ordering compare(AlgebraicReal& a, AlgebraicReal& b);
    friend std::strong_ordering operator<=>(const AlgebraicReal& a, const AlgebraicReal& b) {
        AlgebraicReal x = a, y = b;
        return compare(x, y);
    }
    friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }
    friend bool operator==(const AlgebraicReal& a, const Rational& q) {
        return AlgebraicReal(a).compare_to(q) == std::strong_ordering::equal;
    }

    friend int sign_at(const IntPolynomial& q, AlgebraicReal& x);

private:
    IntPolynomial poly_;
    Rational lo_, hi_;
    int sign_lo_ = 0;  // sign of poly_ at lo_; 0 only for exact rationals
};

// Sign of q at x.  The refining overload narrows x's interval as a side
// effect; the const overload works on a copy.
int sign_at(const IntPolynomial& q, AlgebraicReal& x);
inline int sign_at(const IntPolynomial& q, const AlgebraicReal& x) {
    AlgebraicReal c = x;
    return sign_at(q, c);
}

// A rational strictly between a and b; requires a < b.
Rational rational_between(AlgebraicReal& a, AlgebraicReal& b);
inline Rational rational_between(const AlgebraicReal& a, const AlgebraicReal& b) {
    AlgebraicReal x = a, y = b;
    return rational_between(x, y);
}

}  // namespace mms
