#include "mms/geom/rotation.hpp"

#include <cmath>
#include <stdexcept>

namespace mms {

RationalRotation::RationalRotation(Rational sin_v, Rational cos_v)
    : sin_(std::move(sin_v)), cos_(std::move(cos_v)) {
    if (sin_ * sin_ + cos_ * cos_ != Rational(1))
        throw std::invalid_argument("RationalRotation: point not on the unit circle");
}

RationalRotation RationalRotation::from_tau(const Rational& t) {
    Rational den = Rational(1) + t * t;
    return RationalRotation(Rational(2) * t / den, (Rational(1) - t * t) / den);
}

Rational RationalRotation::tau() const {
    if (is_half_turn()) throw std::logic_error("RationalRotation::tau: undefined at the half turn");
    return sin_ / (Rational(1) + cos_);
}

double RationalRotation::angle() const { return std::atan2(sin_.to_double(), cos_.to_double()); }

RationalRotation rational_angle(double theta, double eps) {
    if (eps <= 0) throw std::invalid_argument("rational_angle: eps must be positive");
    if (!std::isfinite(theta)) throw std::invalid_argument("rational_angle: theta not finite");
    const double pi = std::acos(-1.0);
    while (theta > pi) theta -= 2 * pi;
    while (theta <= -pi) theta += 2 * pi;
    // The half turn has no finite tangent half-angle; callers that need
    // theta = pi must use the exact half turn (or the second chart) instead.
    if (std::abs(theta) > pi - 1e-9)
        throw std::domain_error("rational_angle: no finite tau near theta = pi");

    double target = std::tan(theta / 2);
    bool neg = target < 0;
    double x = std::abs(target);

    // Continued-fraction convergents p/q of x; accept the first whose angle
    // lands within eps.  Useful down to eps around 1e-12, the double noise
    // floor of the tangent/arctangent round trip.
    BigInt p0 = 0, q0 = 1;  // virtual convergents h(-2)/k(-2), h(-1)/k(-1)
    BigInt p1 = 1, q1 = 0;
    double rem = x;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(rem);
        if (!(fl >= 0) || fl > 9e17) break;  // degenerate tail
        BigInt a = static_cast<long long>(fl);
        BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        Rational approx(neg ? -p1 : p1, q1);
        if (std::abs(2 * std::atan(approx.to_double()) - theta) <= eps)
            return RationalRotation::from_tau(approx);
        double frac = rem - fl;
        if (frac <= 0) break;
        rem = 1 / frac;
    }
    return RationalRotation::from_tau(Rational(neg ? -p1 : p1, q1));
}

RationalRotation rotation_near(double theta, double eps) {
    const double pi = std::acos(-1.0);
    while (theta > pi) theta -= 2 * pi;
    while (theta <= -pi) theta += 2 * pi;
    if (std::abs(theta) <= pi / 2) return rational_angle(theta, eps);
    double back = theta > 0 ? theta - pi : theta + pi;  // in (-pi/2, pi/2)
    if (back == 0) return RationalRotation::half_turn();
    return rational_angle(back, eps).composed(RationalRotation::half_turn());
}

}  // namespace mms
