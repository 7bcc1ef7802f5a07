#include "mms/numeric/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace mms {

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
    c_.reserve(coeffs.size());
    for (long long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPolynomial IntPolynomial::from_rationals(const std::vector<Rational>& coeffs) {
    BigInt l = 1;
    for (const Rational& r : coeffs) l = l / gcd_of(l, r.den()) * r.den();
    std::vector<BigInt> c;
    c.reserve(coeffs.size());
    for (const Rational& r : coeffs) c.push_back(r.num() * (l / r.den()));
    return IntPolynomial(std::move(c)).primitive_part();
}

const BigInt& IntPolynomial::coeff(int i) const {
    static const BigInt zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const BigInt& IntPolynomial::leading() const {
    static const BigInt zero(0);
    return c_.empty() ? zero : c_.back();
}

BigInt IntPolynomial::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPolynomial::eval(const Rational& x) const {
    if (c_.empty()) return Rational(0);
    // Homogenize: value = (sum c_i a^i b^(n-i)) / b^n for x = a/b.
    BigInt acc = c_.back(), bp = 1, bn = 1;
    for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) {
        bp *= x.den();
        bn *= x.den();
        acc = acc * x.num() + *it * bp;
    }
    return Rational(std::move(acc), std::move(bn));
}

int IntPolynomial::sign_at(const Rational& x) const {
    if (c_.empty()) return 0;
    BigInt acc = c_.back(), bp = 1;
    for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) {
        bp *= x.den();
        acc = acc * x.num() + *it * bp;
    }
    return acc.sign();
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * BigInt(static_cast<long>(i));
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (BigInt& v : r.c_) v = -v;
    return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& k) {
    if (k.is_zero()) {
        c_.clear();
        return *this;
    }
    for (BigInt& v : c_) v *= k;
    return *this;
}

BigInt IntPolynomial::content() const {
    BigInt g = 0;
    for (const BigInt& v : c_) {
        g = gcd_of(g, v);
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (c_.empty()) return {};
    BigInt g = content();
    if (g == 1) return *this;
    IntPolynomial r = *this;
    for (BigInt& v : r.c_) v /= g;
    return r;
}

IntPolynomial IntPolynomial::canonical() const {
    IntPolynomial r = primitive_part();
    if (!r.c_.empty() && r.c_.back() < 0)
        for (BigInt& v : r.c_) v = -v;
    return r;
}

IntPolynomial IntPolynomial::times_xk(int k) const {
    if (c_.empty() || k == 0) return *this;
    std::vector<BigInt> c(c_.size() + static_cast<size_t>(k), BigInt(0));
    std::copy(c_.begin(), c_.end(), c.begin() + k);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::reversed() const {
    std::vector<BigInt> c(c_.rbegin(), c_.rend());
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::taylor_shift_1() const {
    IntPolynomial r = *this;
    int n = r.degree();
    for (int k = 0; k < n; ++k)
        for (int j = n - 1; j >= k; --j) r.c_[j] += r.c_[j + 1];
    return r;
}

IntPolynomial IntPolynomial::half_scale() const {
    IntPolynomial r = *this;
    int n = r.degree();
    for (int i = 0; i < n; ++i) r.c_[i] <<= static_cast<unsigned>(n - i);
    return r;
}

IntPolynomial IntPolynomial::scale_pow2(unsigned k) const {
    IntPolynomial r = *this;
    for (size_t i = 1; i < r.c_.size(); ++i) r.c_[i] <<= static_cast<unsigned>(k * i);
    return r;
}

int IntPolynomial::sign_variations() const {
    int vars = 0, last = 0;
    for (const BigInt& v : c_) {
        int s = v.sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++vars;
        last = s;
    }
    return vars;
}

std::string IntPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& v = c_[i];
        if (v.is_zero()) continue;
        BigInt a = abs_of(v);
        if (s.empty())
            s += v < 0 ? "-" : "";
        else
            s += v < 0 ? " - " : " + ";
        if (a != 1 || i == 0) s += a.str();
        if (i >= 1) {
            if (a != 1) s += "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

namespace {

// Pseudo-remainder of a by b up to a positive constant factor; b must have a
// positive leading coefficient.
IntPolynomial pseudo_rem(IntPolynomial a, const IntPolynomial& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        int shift = a.degree() - b.degree();
        a = a * b.leading() - b.times_xk(shift) * a.leading();
    }
    return a;
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& a0, const IntPolynomial& b0) {
    IntPolynomial a = a0.canonical(), b = b0.canonical();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = pseudo_rem(a, b).canonical();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::logic_error("exact_divide: zero divisor");
    if (a.is_zero()) return {};
    int da = a.degree(), db = b.degree();
    if (da < db) throw std::logic_error("exact_divide: not divisible (degree)");
    std::vector<BigInt> rem = a.coeffs();
    std::vector<BigInt> q(static_cast<size_t>(da - db) + 1, BigInt(0));
    for (int k = da - db; k >= 0; --k) {
        BigInt& top = rem[static_cast<size_t>(k + db)];
        if (top.is_zero()) continue;
        BigInt qk, r;
        boost::multiprecision::divide_qr(top, b.leading(), qk, r);
        if (!r.is_zero()) throw std::logic_error("exact_divide: not divisible (leading)");
        q[static_cast<size_t>(k)] = qk;
        for (int i = 0; i <= db; ++i) rem[static_cast<size_t>(k + i)] -= qk * b.coeff(i);
    }
    for (const BigInt& v : rem)
        if (!v.is_zero()) throw std::logic_error("exact_divide: not divisible (remainder)");
    return IntPolynomial(std::move(q));
}

IntPolynomial square_free_part(const IntPolynomial& p) {
    IntPolynomial pp = p.canonical();
    if (pp.is_constant()) return pp;
    IntPolynomial g = poly_gcd(pp, pp.derivative());
    if (g.is_constant()) return pp;
    return exact_divide(pp, g).canonical();
}

std::vector<std::pair<IntPolynomial, int>> square_free_decomposition(const IntPolynomial& p0) {
    std::vector<std::pair<IntPolynomial, int>> out;
    IntPolynomial p = p0.canonical();
    if (p.is_constant()) return out;
    IntPolynomial dp = p.derivative();
    IntPolynomial g = poly_gcd(p, dp);
    if (g.is_constant()) {
        out.emplace_back(std::move(p), 1);
        return out;
    }
    // Yun's algorithm; all divisions are exact over the integers because p is
    // primitive.
    IntPolynomial c = exact_divide(p, g);
    IntPolynomial d = exact_divide(dp, g) - c.derivative();
    int i = 1;
    while (!c.is_constant()) {
        IntPolynomial a = poly_gcd(c, d);
        if (a.degree() >= 1) out.emplace_back(a, i);
        IntPolynomial c2 = exact_divide(c, a);
        d = exact_divide(d, a) - c2.derivative();
        c = std::move(c2);
        ++i;
    }
    return out;
}

bool have_common_root(const IntPolynomial& a, const IntPolynomial& b) {
    return !poly_gcd(a, b).is_constant();
}

}  // namespace mms
