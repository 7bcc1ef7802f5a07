#pragma once

#include <optional>
#include <vector>

#include "mms/geom/point.hpp"

namespace mms {

enum class PointLocation { Inside, Boundary, Outside };

class RationalRotation;

// Simple polygon, normalized: counterclockwise vertex order and no three
// consecutive collinear vertices.  Repeated vertices and self-intersections
// are rejected at construction.
class Polygon {
public:
    Polygon() = default;
    // Validates simplicity, orients counterclockwise, and drops straight
    // vertices; nullopt on invalid input (fewer than 3 vertices, repeats,
    // zero area, spikes, self-intersection).
    static std::optional<Polygon> make(std::vector<Point> vertices);

    int size() const { return static_cast<int>(v_.size()); }
    const std::vector<Point>& vertices() const { return v_; }
    const Point& vertex(int i) const { return v_[static_cast<size_t>(i)]; }
    // Edge i runs from vertex i to vertex (i+1) mod n.
    Segment edge(int i) const {
        return {v_[static_cast<size_t>(i)], v_[(static_cast<size_t>(i) + 1) % v_.size()]};
    }

    Rational area() const;  // positive
    bool is_convex() const;
    Box bbox() const;
    // Max squared distance of a vertex from the origin (the reference point).
    Rational circumradius_sq() const;

    PointLocation locate(const Point& p) const;

    Polygon translated(const Point& d) const;
    Polygon rotated(const RationalRotation& r) const;
    Polygon scaled(const Rational& k) const;  // k > 0, about the origin
    Polygon negated() const;                  // point reflection through the origin

    // Fan-free exact triangulation (ear clipping); triangles are
    // counterclockwise and partition the polygon.
    std::vector<Polygon> triangulate() const;

private:
    std::vector<Point> v_;
    static Rational signed_area(const std::vector<Point>& v);
};

// Minkowski sum of two convex counterclockwise polygons.
Polygon convex_minkowski_sum(const Polygon& a, const Polygon& b);

}  // namespace mms
