#include "mms/geom/point.hpp"

namespace mms {

bool on_segment(const Point& p, const Segment& s) {
    if (orientation(s.a, s.b, p) != 0) return false;
    return dot(p - s.a, s.b - s.a).sign() >= 0 && dot(p - s.b, s.a - s.b).sign() >= 0;
}

bool segments_intersect(const Segment& s, const Segment& t) {
    int d1 = orientation(s.a, s.b, t.a);
    int d2 = orientation(s.a, s.b, t.b);
    int d3 = orientation(t.a, t.b, s.a);
    int d4 = orientation(t.a, t.b, s.b);
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    if (d1 == 0 && on_segment(t.a, s)) return true;
    if (d2 == 0 && on_segment(t.b, s)) return true;
    if (d3 == 0 && on_segment(s.a, t)) return true;
    if (d4 == 0 && on_segment(s.b, t)) return true;
    return false;
}

std::optional<Point> line_intersection(const Segment& s, const Segment& t) {
    Point d1 = s.b - s.a, d2 = t.b - t.a;
    Rational den = cross(d1, d2);
    if (den.is_zero()) return std::nullopt;
    Rational u = cross(t.a - s.a, d2) / den;
    return s.a + u * d1;
}

}  // namespace mms
