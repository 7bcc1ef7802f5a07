#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "mms/numeric/bigint.hpp"
#include "mms/numeric/rational.hpp"

namespace mms {

// Univariate polynomial with exact integer coefficients, stored low -> high.
// Invariant: no trailing zero coefficient; the zero polynomial stores nothing.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long long> coeffs);

    // Clears denominators and divides out the content.  Preserves the sign of
    // the value at every point (scaling is by a positive rational), not the
    // value itself.
    static IntPolynomial from_rationals(const std::vector<Rational>& coeffs);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const BigInt& coeff(int i) const;
    const BigInt& leading() const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    BigInt eval(const BigInt& x) const;
    Rational eval(const Rational& x) const;
    // Sign of the value at x, via homogenized integer Horner (no rational
    // normalization churn).
    int sign_at(const Rational& x) const;

    IntPolynomial derivative() const;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    IntPolynomial& operator*=(const BigInt& k);
    friend IntPolynomial operator*(IntPolynomial p, const BigInt& k) { return p *= k; }
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

    BigInt content() const;                // >= 0; zero only for the zero polynomial
    IntPolynomial primitive_part() const;  // content 1, sign of leading preserved
    IntPolynomial canonical() const;       // primitive with positive leading coefficient

    IntPolynomial times_xk(int k) const;  // multiply by x^k

    // Transforms used by the Descartes isolator.
    IntPolynomial reversed() const;              // x^deg * p(1/x)
    IntPolynomial taylor_shift_1() const;        // p(x + 1)
    IntPolynomial half_scale() const;            // 2^deg * p(x / 2)
    IntPolynomial scale_pow2(unsigned k) const;  // p(2^k * x)

    int sign_variations() const;

    std::string to_string() const;  // debug form, e.g. "x^2 - 2"

private:
    std::vector<BigInt> c_;
    void trim();
};

// Canonical gcd (primitive pseudo-remainder sequence).
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// Quotient a / b; throws std::logic_error unless b divides a exactly.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

IntPolynomial square_free_part(const IntPolynomial& p);  // canonical

// Yun decomposition: (factor, multiplicity) pairs with canonical, pairwise
// coprime factors whose product with multiplicities is canonical(p).
std::vector<std::pair<IntPolynomial, int>> square_free_decomposition(const IntPolynomial& p);

// True iff gcd(a, b) is nonconstant, i.e. a and b share a complex root.
bool have_common_root(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace mms
