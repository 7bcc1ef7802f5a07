#pragma once

#include <optional>
#include <string>

#include "mms/numeric/rational.hpp"

namespace mms {

struct Point {
    Rational x, y;

    Point() = default;
    Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

    friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(const Rational& k, const Point& p) { return {k * p.x, k * p.y}; }
    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    // Lexicographic; used for canonical segment orientation and map keys.
    friend bool operator<(const Point& a, const Point& b) {
        auto c = a.x <=> b.x;
        if (c != 0) return c < 0;
        return a.y < b.y;
    }

    Rational norm_sq() const { return x * x + y * y; }
    std::string to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }
};

inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

// Sign of the turn a->b->c: +1 left (counterclockwise), -1 right, 0 collinear.
inline int orientation(const Point& a, const Point& b, const Point& c) {
    return cross(b - a, c - a).sign();
}

struct Segment {
    Point a, b;

    Segment() = default;
    Segment(Point pa, Point pb) : a(std::move(pa)), b(std::move(pb)) {}

    bool is_vertical() const { return a.x == b.x; }
    bool is_degenerate() const { return a == b; }
    // y-coordinate at x; requires a non-vertical segment whose x-span covers x.
    Rational y_at(const Rational& x) const {
        return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
    }
    friend bool operator==(const Segment& s, const Segment& t) { return s.a == t.a && s.b == t.b; }
    friend bool operator<(const Segment& s, const Segment& t) {
        if (s.a != t.a) return s.a < t.a;
        return s.b < t.b;
    }
};

// Closed-segment membership.
bool on_segment(const Point& p, const Segment& s);

// Closed-segment intersection test (touching counts).
bool segments_intersect(const Segment& s, const Segment& t);

// Intersection point of the supporting lines; nullopt if parallel (including
// collinear).
std::optional<Point> line_intersection(const Segment& s, const Segment& t);

struct Box {
    Rational xlo, ylo, xhi, yhi;

    bool contains(const Point& p) const {
        return p.x >= xlo && p.x <= xhi && p.y >= ylo && p.y <= yhi;
    }
    bool strictly_contains(const Point& p) const {
        return p.x > xlo && p.x < xhi && p.y > ylo && p.y < yhi;
    }
    Box expanded(const Rational& m) const { return {xlo - m, ylo - m, xhi + m, yhi + m}; }
};

}  // namespace mms
