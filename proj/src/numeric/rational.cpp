#include "mms/numeric/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace mms {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = gcd_of(abs_of(num_), den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_.is_zero()) throw std::invalid_argument("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::reciprocal() const {
    if (num_.is_zero()) throw std::invalid_argument("Rational: reciprocal of zero");
    Rational r;
    if (num_ < 0) {
        r.num_ = -den_;
        r.den_ = -num_;
    } else {
        r.num_ = den_;
        r.den_ = num_;
    }
    return r;
}

double Rational::to_double() const {
    // Scale so the quotient fits a double with full mantissa precision.
    BigInt n = abs_of(num_);
    if (n.is_zero()) return 0.0;
    long nb = static_cast<long>(boost::multiprecision::msb(n));
    long db = static_cast<long>(boost::multiprecision::msb(den_));
    long shift = nb - db - 62;
    BigInt sn = n, sd = den_;
    if (shift > 0)
        sd <<= shift;
    else if (shift < 0)
        sn <<= -shift;
    double q = static_cast<double>(sn) / static_cast<double>(sd);
    double v = std::ldexp(q, static_cast<int>(shift));
    return num_ < 0 ? -v : v;
}

std::string Rational::to_string() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
}

std::optional<Rational> Rational::parse(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt n(text.substr(0, slash));
            BigInt d(text.substr(slash + 1));
            if (d.is_zero()) return std::nullopt;
            return Rational(n, d);
        }
        // Decimal, possibly with exponent: [-]ddd[.ddd][e[-]dd]
        std::string mant = text;
        long exp10 = 0;
        if (auto e = text.find_first_of("eE"); e != std::string::npos) {
            exp10 = std::strtol(text.c_str() + e + 1, nullptr, 10);
            mant = text.substr(0, e);
        }
        std::string digits = mant;
        if (auto dot = mant.find('.'); dot != std::string::npos) {
            digits = mant.substr(0, dot) + mant.substr(dot + 1);
            exp10 -= static_cast<long>(mant.size() - dot - 1);
        }
        if (digits.empty() || digits == "-" || digits == "+") return std::nullopt;
        BigInt n(digits);
        Rational r(n, 1);
        BigInt p10 = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::labs(exp10)));
        if (exp10 >= 0)
            r *= Rational(p10);
        else
            r /= Rational(p10);
        return r;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

Rational Rational::from_double(double d) {
    if (!std::isfinite(d)) throw std::invalid_argument("Rational: non-finite double");
    int exp = 0;
    double m = std::frexp(d, &exp);
    // m * 2^53 is integral.
    BigInt num = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    if (exp >= 0) return Rational(num << exp);
    return Rational(num, BigInt(1) << -exp);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace mms
