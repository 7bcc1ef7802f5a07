#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>

#include "mms/numeric/bigint.hpp"

namespace mms {

// Exact rational, always canonical: den > 0 and gcd(|num|, den) == 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}            // NOLINT implicit
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}  // NOLINT implicit
    Rational(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    int sign() const { return num_.sign(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational abs() const { return num_ < 0 ? -*this : *this; }
    Rational reciprocal() const;

    double to_double() const;

    // Canonical text form: "3", "-7/2".
    std::string to_string() const;

    // Accepts "3", "-7/2", "1.25", "-0.5e2". Returns nullopt on malformed input.
    static std::optional<Rational> parse(const std::string& text);

    // Exact value of d (d must be finite).
    static Rational from_double(double d);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    BigInt num_, den_;
    void normalize();
};

inline Rational midpoint(const Rational& a, const Rational& b) {
    return (a + b) / Rational(2);
}

}  // namespace mms
