#include "mms/geom/polygon.hpp"

#include <algorithm>
#include <stdexcept>

#include "mms/geom/rotation.hpp"

namespace mms {

namespace {

// Order of edge direction angles in [0, 2pi), for the convex sum merge.
bool angle_less(const Point& u, const Point& v) {
    auto half = [](const Point& d) {  // 0: angle in [0, pi), 1: [pi, 2pi)
        if (d.y.sign() > 0 || (d.y.is_zero() && d.x.sign() > 0)) return 0;
        return 1;
    };
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    return cross(u, v).sign() > 0;
}

}  // namespace

Rational Polygon::signed_area(const std::vector<Point>& v) {
    Rational s;
    for (size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
    return s / Rational(2);
}

std::optional<Polygon> Polygon::make(std::vector<Point> vertices) {
    if (vertices.size() < 3) return std::nullopt;
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == vertices[(i + 1) % vertices.size()]) return std::nullopt;
    Rational area2 = signed_area(vertices);
    if (area2.is_zero()) return std::nullopt;
    if (area2.sign() < 0) std::reverse(vertices.begin(), vertices.end());

    // Normalize: drop straight vertices; a spike (edge folding back) is
    // invalid.  Dropping one vertex can make its neighbor straight, so loop.
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < vertices.size(); ++i) {
            size_t n = vertices.size();
            if (n < 3) return std::nullopt;
            const Point& a = vertices[(i + n - 1) % n];
            const Point& b = vertices[i];
            const Point& c = vertices[(i + 1) % n];
            if (orientation(a, b, c) != 0) continue;
            if (dot(c - b, a - b).sign() > 0) return std::nullopt;  // spike
            vertices.erase(vertices.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
            break;
        }
    }

    size_t n = vertices.size();
    for (size_t i = 0; i < n; ++i) {
        Segment si{vertices[i], vertices[(i + 1) % n]};
        for (size_t j = i + 1; j < n; ++j) {
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;  // adjacent
            Segment sj{vertices[j], vertices[(j + 1) % n]};
            if (segments_intersect(si, sj)) return std::nullopt;
        }
    }
    Polygon p;
    p.v_ = std::move(vertices);
    return p;
}

Rational Polygon::area() const { return signed_area(v_); }

bool Polygon::is_convex() const {
    for (size_t i = 0; i < v_.size(); ++i)
        if (orientation(v_[i], v_[(i + 1) % v_.size()], v_[(i + 2) % v_.size()]) < 0) return false;
    return true;
}

Box Polygon::bbox() const {
    Box b{v_[0].x, v_[0].y, v_[0].x, v_[0].y};
    for (const Point& p : v_) {
        b.xlo = std::min(b.xlo, p.x);
        b.xhi = std::max(b.xhi, p.x);
        b.ylo = std::min(b.ylo, p.y);
        b.yhi = std::max(b.yhi, p.y);
    }
    return b;
}

Rational Polygon::circumradius_sq() const {
    Rational m;
    for (const Point& p : v_) m = std::max(m, p.norm_sq());
    return m;
}

PointLocation Polygon::locate(const Point& p) const {
    for (int i = 0; i < size(); ++i)
        if (on_segment(p, edge(i))) return PointLocation::Boundary;
    bool inside = false;
    for (size_t i = 0; i < v_.size(); ++i) {
        const Point& a = v_[i];
        const Point& b = v_[(i + 1) % v_.size()];
        if ((a.y > p.y) != (b.y > p.y)) {
            // x of the edge at height p.y, compared to p.x
            Rational xint = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (xint > p.x) inside = !inside;
        }
    }
    return inside ? PointLocation::Inside : PointLocation::Outside;
}

Polygon Polygon::translated(const Point& d) const {
    Polygon p = *this;
    for (Point& q : p.v_) q = q + d;
    return p;
}

Polygon Polygon::rotated(const RationalRotation& r) const {
    Polygon p = *this;
    for (Point& q : p.v_) q = r.apply(q);
    return p;
}

Polygon Polygon::scaled(const Rational& k) const {
    if (k.sign() <= 0) throw std::invalid_argument("Polygon::scaled: factor must be positive");
    Polygon p = *this;
    for (Point& q : p.v_) q = k * q;
    return p;
}

Polygon Polygon::negated() const {
    // point reflection is a half turn, so orientation is preserved
    Polygon p = *this;
    for (Point& q : p.v_) q = Point(-q.x, -q.y);
    return p;
}

std::vector<Polygon> Polygon::triangulate() const {
    std::vector<Point> w = v_;
    std::vector<Polygon> out;
    auto emit = [&out](const Point& a, const Point& b, const Point& c) {
        if (orientation(a, b, c) > 0) {
            Polygon t;
            t.v_ = {a, b, c};
            out.push_back(std::move(t));
        }
    };
    size_t guard = w.size() * w.size() + 16;
    while (w.size() > 3) {
        if (guard-- == 0) throw std::logic_error("triangulate: no ear found");
        bool clipped = false;
        for (size_t i = 0; i < w.size() && !clipped; ++i) {
            size_t p = (i + w.size() - 1) % w.size(), n = (i + 1) % w.size();
            int o = orientation(w[p], w[i], w[n]);
            if (o < 0) continue;
            if (o == 0) {  // straight vertex: drop without a triangle
                w.erase(w.begin() + static_cast<long>(i));
                clipped = true;
                break;
            }
            bool blocked = false;
            for (size_t j = 0; j < w.size() && !blocked; ++j) {
                if (j == p || j == i || j == n) continue;
                // any other vertex in the closed ear triangle blocks it
                if (orientation(w[p], w[i], w[j]) >= 0 && orientation(w[i], w[n], w[j]) >= 0 &&
                    orientation(w[n], w[p], w[j]) >= 0)
                    blocked = true;
            }
            if (blocked) continue;
            emit(w[p], w[i], w[n]);
            w.erase(w.begin() + static_cast<long>(i));
            clipped = true;
        }
        if (!clipped) throw std::logic_error("triangulate: stuck on a simple polygon");
    }
    if (w.size() == 3) emit(w[0], w[1], w[2]);
    return out;
}

Polygon convex_minkowski_sum(const Polygon& a, const Polygon& b) {
    auto bottom_start = [](const Polygon& p) {
        int best = 0;
        for (int i = 1; i < p.size(); ++i) {
            const Point &v = p.vertex(i), &w = p.vertex(best);
            if (v.y < w.y || (v.y == w.y && v.x < w.x)) best = i;
        }
        return best;
    };
    int ia = bottom_start(a), ib = bottom_start(b);
    int na = a.size(), nb = b.size();
    std::vector<Point> out;
    Point cur = a.vertex(ia) + b.vertex(ib);
    int i = 0, j = 0;
    while (i < na || j < nb) {
        out.push_back(cur);
        Point ea, eb;
        if (i < na) ea = a.vertex((ia + i + 1) % na) - a.vertex((ia + i) % na);
        if (j < nb) eb = b.vertex((ib + j + 1) % nb) - b.vertex((ib + j) % nb);
        bool take_a;
        if (i >= na)
            take_a = false;
        else if (j >= nb)
            take_a = true;
        else if (cross(ea, eb).is_zero() && dot(ea, eb).sign() > 0) {
            // parallel edges merge into one step
            cur = cur + ea + eb;
            ++i;
            ++j;
            continue;
        } else
            take_a = angle_less(ea, eb);
        cur = cur + (take_a ? ea : eb);
        if (take_a)
            ++i;
        else
            ++j;
    }
    auto p = Polygon::make(std::move(out));
    if (!p) throw std::logic_error("convex_minkowski_sum: degenerate result");
    return *p;
}

}  // namespace mms
