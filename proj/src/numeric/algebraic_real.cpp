#include "mms/numeric/algebraic_real.hpp"

#include <stdexcept>
#include <utility>

namespace mms {

AlgebraicReal::AlgebraicReal(Rational v) : lo_(v), hi_(std::move(v)) {
    // den*x - num: canonical linear defining polynomial.
    poly_ = IntPolynomial(std::vector<BigInt>{-lo_.num(), lo_.den()});
}

AlgebraicReal::AlgebraicReal(IntPolynomial poly, Rational lo, Rational hi)
    : poly_(poly.canonical()), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ >= hi_) throw std::invalid_argument("AlgebraicReal: empty interval");
    sign_lo_ = poly_.sign_at(lo_);
    int sh = poly_.sign_at(hi_);
    if (sign_lo_ == 0 || sh == 0 || sign_lo_ == sh)
        throw std::invalid_argument("AlgebraicReal: no sign change over interval");
}

void AlgebraicReal::refine() {
    if (is_rational()) return;
    Rational m = midpoint(lo_, hi_);
    int s = poly_.sign_at(m);
    if (s == 0) {
        lo_ = hi_ = m;
        sign_lo_ = 0;
    } else if (s == sign_lo_) {
        lo_ = std::move(m);
    } else {
        hi_ = std::move(m);
    }
}

void AlgebraicReal::refine_below(const Rational& width) {
    while (!is_rational() && hi_ - lo_ > width) refine();
}

std::strong_ordering AlgebraicReal::compare_to(const Rational& q) {
    if (is_rational()) return lo_ <=> q;
    if (q <= lo_) return std::strong_ordering::greater;
    if (q >= hi_) return std::strong_ordering::less;
    int s = poly_.sign_at(q);
    if (s == 0) {
        lo_ = hi_ = q;
        sign_lo_ = 0;
        return std::strong_ordering::equal;
    }
    if (s == sign_lo_) {
        lo_ = q;  // root lies in (q, hi)
        return std::strong_ordering::greater;
    }
    hi_ = q;
    return std::strong_ordering::less;
}

int AlgebraicReal::sign() {
    auto c = compare_to(Rational(0));
    if (c == std::strong_ordering::less) return -1;
    if (c == std::strong_ordering::greater) return 1;
    return 0;
}

double AlgebraicReal::to_double() const {
    AlgebraicReal t = *this;
    if (!t.is_rational()) {
        Rational scale = std::max({Rational(1), t.lo_.abs(), t.hi_.abs()});
        Rational target = scale / Rational(BigInt(1) << 62);
        t.refine_below(target);
    }
    if (t.is_rational()) return t.lo_.to_double();
    return midpoint(t.lo_, t.hi_).to_double();
}

std::string AlgebraicReal::to_string() const {
    if (is_rational()) return lo_.to_string();
    return "root of " + poly_.to_string() + " in (" + lo_.to_string() + ", " + hi_.to_string() +
           ")";
}

std::strong_ordering compare(AlgebraicReal& a, AlgebraicReal& b) {
    if (&a == &b) return std::strong_ordering::equal;
    if (a.is_rational()) {
        auto c = b.compare_to(a.lo_);
        if (c == std::strong_ordering::less) return std::strong_ordering::greater;
        if (c == std::strong_ordering::greater) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }
    if (b.is_rational()) return a.compare_to(b.lo_);
    // Open intervals: touching endpoints already separate the roots.
    if (a.hi_ <= b.lo_) return std::strong_ordering::less;
    if (b.hi_ <= a.lo_) return std::strong_ordering::greater;
    // Overlap.  Equality happens iff the common factor has a root there; that
    // root is then the unique root of either polynomial in its own interval.
    IntPolynomial h = poly_gcd(a.poly_, b.poly_);
    if (!h.is_constant()) {
        Rational l = std::max(a.lo_, b.lo_), r = std::min(a.hi_, b.hi_);
        if (h.sign_at(l) != h.sign_at(r)) return std::strong_ordering::equal;
    }
    for (;;) {
        a.refine();
        b.refine();
        if (a.is_rational()) return compare(a, b);
        if (b.is_rational()) return a.compare_to(b.lo_);
        if (a.hi_ <= b.lo_) return std::strong_ordering::less;
        if (b.hi_ <= a.lo_) return std::strong_ordering::greater;
    }
}

namespace {

// Interval Horner: encloses q over [lo, hi].
void interval_eval(const IntPolynomial& q, const Rational& lo, const Rational& hi, Rational& out_lo,
                   Rational& out_hi) {
    out_lo = out_hi = Rational(0);
    for (int i = q.degree(); i >= 0; --i) {
        // [out_lo, out_hi] * [lo, hi] + c_i
        Rational a = out_lo * lo, b = out_lo * hi, c = out_hi * lo, d = out_hi * hi;
        Rational mn = std::min(std::min(a, b), std::min(c, d));
        Rational mx = std::max(std::max(a, b), std::max(c, d));
        Rational ci(q.coeff(i));
        out_lo = mn + ci;
        out_hi = mx + ci;
    }
}

}  // namespace

Rational rational_between(AlgebraicReal& a, AlgebraicReal& b) {
    if (compare(a, b) != std::strong_ordering::less)
        throw std::invalid_argument("rational_between: requires a < b");
    for (;;) {
        if (a.is_rational() && b.is_rational())
            return midpoint(a.rational_value(), b.rational_value());
        if (a.is_rational()) {
            if (b.lower() > a.rational_value()) return midpoint(a.rational_value(), b.lower());
        } else if (b.is_rational()) {
            if (a.upper() < b.rational_value()) return midpoint(a.upper(), b.rational_value());
        } else if (a.upper() <= b.lower()) {
            // interval endpoints are never the value itself, so touching is fine
            return a.upper() == b.lower() ? a.upper() : midpoint(a.upper(), b.lower());
        }
        a.refine();
        b.refine();
    }
}

int sign_at(const IntPolynomial& q, AlgebraicReal& x) {
    if (x.is_rational()) return q.sign_at(x.rational_value());
    if (q.is_zero()) return 0;
    IntPolynomial h = poly_gcd(x.poly_, q);
    if (!h.is_constant()) {
        // h divides poly_, so x's endpoints are not roots of h; a sign change
        // means the root of h in the interval is x itself.
        if (h.sign_at(x.lo_) != h.sign_at(x.hi_)) return 0;
    }
    for (;;) {
        Rational lo, hi;
        interval_eval(q, x.lo_, x.hi_, lo, hi);
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
        x.refine();
        if (x.is_rational()) return q.sign_at(x.rational_value());
    }
}

}  // namespace mms
