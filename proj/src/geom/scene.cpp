#include "mms/geom/scene.hpp"

#include <algorithm>

#include "mms/geom/pslg.hpp"

namespace mms {

namespace {

bool boxes_meet(const Box& a, const Box& b) {
    return a.xlo <= b.xhi && b.xlo <= a.xhi && a.ylo <= b.yhi && b.ylo <= a.yhi;
}

bool boxes_overlap_openly(const Box& a, const Box& b) {
    return a.xlo < b.xhi && b.xlo < a.xhi && a.ylo < b.yhi && b.ylo < a.yhi;
}

}  // namespace

bool polygons_intersect(const Polygon& a, const Polygon& b) {
    if (!boxes_meet(a.bbox(), b.bbox())) return false;
    for (int i = 0; i < a.size(); ++i)
        if (b.locate(a.vertex(i)) != PointLocation::Outside) return true;
    for (int i = 0; i < b.size(); ++i)
        if (a.locate(b.vertex(i)) != PointLocation::Outside) return true;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            if (segments_intersect(a.edge(i), b.edge(j))) return true;
    return false;
}

bool interiors_intersect(const Polygon& a, const Polygon& b) {
    if (!boxes_overlap_openly(a.bbox(), b.bbox())) return false;
    for (int i = 0; i < a.size(); ++i)
        if (b.locate(a.vertex(i)) == PointLocation::Inside) return true;
    for (int i = 0; i < b.size(); ++i)
        if (a.locate(b.vertex(i)) == PointLocation::Inside) return true;

    bool touching = false;
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < b.size(); ++j) {
            Segment ea = a.edge(i), eb = b.edge(j);
            int d1 = orientation(eb.a, eb.b, ea.a);
            int d2 = orientation(eb.a, eb.b, ea.b);
            int d3 = orientation(ea.a, ea.b, eb.a);
            int d4 = orientation(ea.a, ea.b, eb.b);
            if (d1 * d2 < 0 && d3 * d4 < 0) return true;  // proper crossing
            touching = touching || segments_intersect(ea, eb);
        }
    }
    if (!touching) return false;

    // Boundaries touch degenerately (vertex on edge, collinear overlap) with
    // no vertex strictly inside and no proper crossing.  Overlay the two
    // boundaries: each overlay face has constant membership in both
    // interiors, so sampling every face decides exactly.
    Box ba = a.bbox(), bb = b.bbox();
    Box join{std::min(ba.xlo, bb.xlo), std::min(ba.ylo, bb.ylo), std::max(ba.xhi, bb.xhi),
             std::max(ba.yhi, bb.yhi)};
    std::vector<Segment> edges;
    for (int i = 0; i < a.size(); ++i) edges.push_back(a.edge(i));
    for (int j = 0; j < b.size(); ++j) edges.push_back(b.edge(j));
    Pslg overlay(edges, join.expanded(Rational(1)));
    for (int f = 1; f < overlay.face_count(); ++f) {
        const Point& s = overlay.face_sample(f);
        if (a.locate(s) == PointLocation::Inside && b.locate(s) == PointLocation::Inside)
            return true;
    }
    return false;
}

bool Scene::collides(const Configuration& c) const {
    Polygon p = placed(c);
    for (const Point& v : p.vertices())
        if (!workspace.contains(v)) return true;  // body leaves the box
    for (const Polygon& obs : obstacles)
        if (interiors_intersect(p, obs)) return true;
    return false;
}

}  // namespace mms
