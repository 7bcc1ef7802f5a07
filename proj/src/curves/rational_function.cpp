#include "mms/curves/rational_function.hpp"

#include <stdexcept>
#include <utility>

namespace mms {

RationalFunction::RationalFunction(IntPolynomial numerator)
    : RationalFunction(std::move(numerator), IntPolynomial{1}) {}

RationalFunction::RationalFunction(IntPolynomial numerator, IntPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
    if (num_.is_zero()) {
        den_ = IntPolynomial{1};
        return;
    }
    IntPolynomial g = poly_gcd(num_, den_);  // primitive
    if (g.degree() > 0) {
        num_ = exact_divide(num_, g);
        den_ = exact_divide(den_, g);
    }
    BigInt c = gcd_of(num_.content(), den_.content());
    if (c > 1) {
        std::vector<BigInt> nc = num_.coeffs(), dc = den_.coeffs();
        for (BigInt& v : nc) v /= c;
        for (BigInt& v : dc) v /= c;
        num_ = IntPolynomial(std::move(nc));
        den_ = IntPolynomial(std::move(dc));
    }
    if (den_.leading().sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFunction RationalFunction::constant(const Rational& c) {
    return RationalFunction(IntPolynomial(std::vector<BigInt>{c.num()}),
                            IntPolynomial(std::vector<BigInt>{c.den()}));
}

Rational RationalFunction::evaluate(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("RationalFunction: pole");
    return num_.eval(x) / d;
}

int RationalFunction::sign_at(const Rational& x) const {
    int d = den_.sign_at(x);
    if (d == 0) throw std::domain_error("RationalFunction: pole");
    return num_.sign_at(x) * d;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::invalid_argument("RationalFunction: division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

bool operator<(const RationalFunction& a, const RationalFunction& b) {
    auto key = [](const IntPolynomial& p) { return p.coeffs(); };
    if (key(a.num_) != key(b.num_)) return key(a.num_) < key(b.num_);
    return key(a.den_) < key(b.den_);
}

std::string RationalFunction::to_string() const {
    if (den_ == IntPolynomial{1}) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

IntPolynomial level_poly(const RationalFunction& f, const Rational& c) {
    return f.num() * c.den() - f.den() * c.num();
}

IntPolynomial difference_numerator(const RationalFunction& f, const RationalFunction& g) {
    return f.num() * g.den() - g.num() * f.den();
}

}  // namespace mms
