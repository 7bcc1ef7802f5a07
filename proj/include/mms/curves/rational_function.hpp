#pragma once

#include <string>

#include "mms/numeric/polynomial.hpp"
#include "mms/numeric/rational.hpp"

namespace mms {

// Quotient of integer polynomials in canonical form: numerator and
// denominator coprime in Z[x] (no common polynomial factor, contents
// coprime) and the denominator's leading coefficient positive.  Canonical
// form makes structural equality value equality, so instances serve as
// cache keys.
class RationalFunction {
public:
    RationalFunction() : RationalFunction(IntPolynomial{}) {}
    explicit RationalFunction(IntPolynomial numerator);  // denominator 1
    // Canonicalizes; throws if the denominator is identically zero.
    RationalFunction(IntPolynomial numerator, IntPolynomial denominator);
    static RationalFunction constant(const Rational& c);

    const IntPolynomial& num() const { return num_; }
    const IntPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    bool has_pole_at(const Rational& x) const { return den_.sign_at(x) == 0; }
    // Exact value; throws at a pole.
    Rational evaluate(const Rational& x) const;
    // Sign of the value; throws at a pole.
    int sign_at(const Rational& x) const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    // Throws on division by the zero function.
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }
    // Total order on canonical coefficient tuples, for cache maps.
    friend bool operator<(const RationalFunction& a, const RationalFunction& b);

    std::string to_string() const;

private:
    IntPolynomial num_, den_;
};

// Integer polynomial whose real roots are exactly the solutions of f(x) = c
// (away from poles): den(c) * f_n - num(c) * f_d.
IntPolynomial level_poly(const RationalFunction& f, const Rational& c);

// r = f_n g_d - g_n f_d: zero iff f == g; its roots hold every x where
// f(x) = g(x), plus possibly common poles.
IntPolynomial difference_numerator(const RationalFunction& f, const RationalFunction& g);

}  // namespace mms
