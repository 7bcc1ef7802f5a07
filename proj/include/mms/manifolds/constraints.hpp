#pragma once

#include <optional>

#include "mms/geom/point.hpp"
#include "mms/geom/rotation.hpp"

namespace mms {

// The circle of rotations is covered by two tau charts offset by a half
// turn.  Chart A parameterizes a rotation by tau = tan(theta / 2) with theta
// in (-pi, pi); chart B applies the chart rotation on top of a half turn and
// covers theta in (0, 2 pi).  Either chart misses exactly one rotation, so
// any bounded rotation interval fits strictly inside one of them.
enum class Chart { A, B };

// tau coordinate of a rotation in a chart; nullopt at the one rotation the
// chart cannot represent (the half turn for A, the identity for B).
std::optional<Rational> chart_tau(const RationalRotation& r, Chart chart);

// Rotation at tau coordinate t of a chart.
RationalRotation chart_rotation(const Rational& t, Chart chart);

// Fixes the rotation; the manifold is the free part of one workspace slice.
struct AngleConstraint {
    RationalRotation rotation;
};

// Fixes the position to the segment s -> t and the rotation to an interval
// strictly inside one chart; the manifold lives on (tau_lo, tau_hi) x (0, 1)
// where the second coordinate is the position parameter along the segment.
struct SegmentConstraint {
    Point s, t;                           // distinct endpoints
    RationalRotation theta_lo, theta_hi;  // chart taus strictly increasing
    Chart chart = Chart::A;
};

}  // namespace mms
