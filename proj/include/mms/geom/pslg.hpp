#pragma once

#include <optional>
#include <vector>

#include "mms/geom/point.hpp"

namespace mms {

// Clips a segment to a closed box; nullopt if the intersection is empty or a
// single point.
std::optional<Segment> clip_segment(const Segment& s, const Box& box);

// Arrangement of rational segments inside an axis-aligned box, built by slab
// decomposition: segments are split at all mutual intersections, their
// x-coordinates bound vertical slabs, and faces are formed by gluing slab
// regions across event lines along open y-overlaps not blocked by a vertical
// edge.  Faces are open sets: an edge or a pinch vertex separates.  Face ids
// are deterministic; the outer face (everything outside the box) is id 0.
class Pslg {
public:
    // Segments are clipped to the box; the box boundary itself is part of the
    // arrangement.
    Pslg(const std::vector<Segment>& segments, Box box);

    const Box& box() const { return box_; }
    int face_count() const { return face_count_; }
    static constexpr int kOuterFace = 0;
    int locate(const Point& p) const;  // -1 if on an edge or vertex
    const Rational& face_area(int f) const { return face_area_[static_cast<size_t>(f)]; }
    // Fixed interior point of a face (largest-area trapezoid midpoint).
    const Point& face_sample(int f) const { return face_sample_[static_cast<size_t>(f)]; }
    // Faces whose closure contains p (one face if p is interior to it).
    std::vector<int> faces_touching(const Point& p) const;

    // Edges after splitting: non-vertical and vertical separately.
    const std::vector<Segment>& atoms() const { return atoms_; }
    const std::vector<Segment>& vertical_atoms() const { return vertical_atoms_; }

    struct Trapezoid {
        Rational xl, xr;
        int bottom, top;  // indices into atoms()
        int face;
    };
    const std::vector<Trapezoid>& trapezoids() const { return traps_; }

    // Parameters t in [0,1], sorted and deduplicated, where s meets an edge
    // of the arrangement; always contains 0 and 1.
    std::vector<Rational> cut_parameters(const Segment& s) const;

    // True if the whole closed segment ab lies strictly inside face f
    // (no contact with any edge or vertex).
    bool segment_in_face(int f, const Point& a, const Point& b) const;

    // True if the whole segment ab lies in the closure of face f (contact
    // with bounding edges and vertices allowed).
    bool segment_in_closed_face(int f, const Point& a, const Point& b) const;

    // Locally shortest polyline from a to b within the closure of face f,
    // over the visibility graph of the face's vertices plus the endpoints.
    // Throws "disconnected" if a or b does not touch f.
    std::vector<Point> visibility_shortest_path(int f, const Point& a, const Point& b) const;

private:
    Box box_;
    std::vector<Segment> atoms_;           // non-vertical, a.x < b.x
    std::vector<Segment> vertical_atoms_;  // a.y < b.y
    std::vector<Rational> events_;         // sorted unique x-coordinates

    // Per real slab i (between events_[i] and events_[i+1]): active atom ids
    // bottom to top, and the face id of each of the actives+1 gaps.
    std::vector<std::vector<int>> slab_actives_;
    std::vector<std::vector<int>> slab_gap_face_;

    // Merged closed vertical covers per event index.
    std::vector<std::vector<std::pair<Rational, Rational>>> vertical_cover_;

    int face_count_ = 0;
    std::vector<Rational> face_area_;
    std::vector<Point> face_sample_;
    std::vector<Trapezoid> traps_;

    int slab_of(const Rational& x) const;  // -1 if x is an event or outside
    int event_index(const Rational& x) const;
    int gap_at(int slab, const Rational& x, const Rational& y, bool& on_edge) const;
};

// Path between a and b through whichever bounded face both touch; throws
// "disconnected" if they share no face.
std::vector<Point> visibility_shortest_path(const Pslg& g, const Point& a, const Point& b);

}  // namespace mms
