#pragma once

#include "mms/geom/point.hpp"
#include "mms/numeric/rational.hpp"

namespace mms {

// Exact planar rotation held as a rational (sin, cos) pair on the unit
// circle.  Every rotation except the half turn comes from the tangent
// half-angle parameter t via sin = 2t/(1+t^2), cos = (1-t^2)/(1+t^2).
class RationalRotation {
public:
    RationalRotation() : sin_(0), cos_(1) {}
    // Unit-circle pair; throws unless sin^2 + cos^2 == 1 exactly.
    RationalRotation(Rational sin_v, Rational cos_v);

    static RationalRotation from_tau(const Rational& t);
    static RationalRotation half_turn() { return RationalRotation(Rational(0), Rational(-1)); }

    const Rational& sin() const { return sin_; }
    const Rational& cos() const { return cos_; }

    bool is_half_turn() const { return cos_ == Rational(-1); }
    bool is_identity() const { return cos_ == Rational(1); }

    // Tangent half-angle parameter; requires cos != -1.
    Rational tau() const;

    Point apply(const Point& p) const {
        return {cos_ * p.x - sin_ * p.y, sin_ * p.x + cos_ * p.y};
    }

    RationalRotation composed(const RationalRotation& o) const {
        return RationalRotation(sin_ * o.cos_ + cos_ * o.sin_, cos_ * o.cos_ - sin_ * o.sin_);
    }
    RationalRotation inverse() const { return RationalRotation(-sin_, cos_); }

    double angle() const;  // in (-pi, pi]

    friend bool operator==(const RationalRotation& a, const RationalRotation& b) {
        return a.sin_ == b.sin_ && a.cos_ == b.cos_;
    }

private:
    Rational sin_, cos_;
};

// Rational rotation within eps radians of theta.  The parameter is a
// continued-fraction convergent of tan(theta/2), so numerators and
// denominators stay small.  theta within 1e-9 of an odd multiple of pi has
// no finite parameter and throws domain_error; use half_turn directly.
RationalRotation rational_angle(double theta, double eps);

// Rational rotation within eps radians of theta, valid at every angle:
// angles in the back half-circle are reached by composing a half turn, so
// the tangent half-angle stays in [-1, 1].  Exact at 0 and pi.
RationalRotation rotation_near(double theta, double eps);

}  // namespace mms
