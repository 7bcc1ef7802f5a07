#include "mms/geom/region_cover.hpp"

namespace mms {

namespace {

std::vector<Segment> piece_edges(const std::vector<Polygon>& pieces) {
    std::vector<Segment> out;
    for (const Polygon& p : pieces)
        for (int i = 0; i < p.size(); ++i) out.push_back(p.edge(i));
    return out;
}

}  // namespace

RegionCover::RegionCover(std::vector<Polygon> pieces, Box box)
    : pieces_(std::move(pieces)), pslg_(piece_edges(pieces_), box) {
    free_.assign(static_cast<size_t>(pslg_.face_count()), 0);
    for (int f = 1; f < pslg_.face_count(); ++f) {
        // Every piece edge is an arrangement edge, so one sample point
        // classifies the whole face exactly.
        const Point& s = pslg_.face_sample(f);
        bool blocked = false;
        for (const Polygon& p : pieces_) {
            Box bb = p.bbox();
            if (!bb.contains(s)) continue;
            if (p.locate(s) == PointLocation::Inside) {
                blocked = true;
                break;
            }
        }
        if (!blocked) {
            free_[static_cast<size_t>(f)] = 1;
            ++free_face_count_;
        }
    }
}

int RegionCover::free_face_of(const Point& p) const {
    int f = pslg_.locate(p);
    if (f <= 0) return -1;  // outer face or on an edge
    return free_[static_cast<size_t>(f)] ? f : -1;
}

Rational RegionCover::free_area() const {
    Rational s(0);
    for (int f = 1; f < pslg_.face_count(); ++f)
        if (free_[static_cast<size_t>(f)]) s += pslg_.face_area(f);
    return s;
}

Rational RegionCover::blocked_area() const {
    Rational s(0);
    for (int f = 1; f < pslg_.face_count(); ++f)
        if (!free_[static_cast<size_t>(f)]) s += pslg_.face_area(f);
    return s;
}

}  // namespace mms
