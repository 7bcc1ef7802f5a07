#include <algorithm>
#include <queue>
#include <stdexcept>

#include "mms/numeric/root_isolation.hpp"
#include "mms/planner/planner.hpp"

namespace mms {

namespace {

using TA = std::pair<Rational, Rational>;

// Line through two points with distinct x, as a rational function of tau.
RationalFunction line_through(const TA& p, const TA& q) {
    Rational k = (q.second - p.second) / (q.first - p.first);
    Rational c0 = p.second - k * p.first;
    BigInt d = k.den() * c0.den();
    return RationalFunction(IntPolynomial{std::vector<BigInt>{c0.num() * k.den(), k.num() * c0.den()}},
                            IntPolynomial{std::vector<BigInt>{d}});
}

// Sign of f(x) - v at an algebraic x (x must not be a pole of f).
int sign_minus_at(const RationalFunction& f, const Rational& v, const AlgebraicReal& x) {
    AlgebraicReal a = x, b = x;
    return sign_at(level_poly(f, v), a) * sign_at(f.den(), b);
}

bool any_root_between(const IntPolynomial& p, const AlgebraicReal& lo, const AlgebraicReal& hi) {
    if (p.is_zero()) return true;  // identically equal: treat as touching
    for (const IsolatedRoot& r : isolate_real_roots(p)) {
        if ((lo <=> r.root) == std::strong_ordering::greater) continue;
        if ((r.root <=> hi) == std::strong_ordering::greater) continue;
        return true;
    }
    return false;
}

// f - v keeps one strict sign (want > 0 when `above`) on [lo, hi]; sample_x
// is a rational point of the interval where the sign is checked directly.
bool constant_side_ok(const RationalFunction& f, const Rational& v, bool above,
                      const AlgebraicReal& lo, const AlgebraicReal& hi, const Rational& sample_x) {
    Rational fx = f.evaluate(sample_x);
    if (above ? !(fx > v) : !(fx < v)) return false;
    return !any_root_between(level_poly(f, v), lo, hi);
}

// The horizontal segment at height v over [lo, hi] stays strictly inside the
// cell's fiber.
bool horizontal_ok(const Arrangement::CellCurves& cc, const Rational& v, const AlgebraicReal& lo,
                   const AlgebraicReal& hi, const Rational& sample_x) {
    return constant_side_ok(cc.top, v, true, lo, hi, sample_x) &&
           constant_side_ok(cc.bottom, v, false, lo, hi, sample_x);
}

// Rational height strictly inside both cells' fibers on the event line
// between them.  The cells are glued there, so their open fibers overlap.
Rational crossing_height(const Arrangement& A, const Arrangement::Cell& left,
                         const Arrangement::Cell& right, int event) {
    auto cl = A.cell_curves(left.slab, left.index);
    auto cr = A.cell_curves(right.slab, right.index);
    AlgebraicReal e = A.events()[static_cast<size_t>(event)];
    for (int iter = 0; iter < 64; ++iter, e.refine()) {
        Rational m = midpoint(e.lower(), e.upper());
        Rational vbl, vtl, vbr, vtr;
        try {
            vbl = cl.bottom.evaluate(m);
            vtl = cl.top.evaluate(m);
            vbr = cr.bottom.evaluate(m);
            vtr = cr.top.evaluate(m);
        } catch (const std::exception&) {
            continue;  // hit a pole just outside a piece's span: tighten
        }
        Rational lo = std::max(vbl, vbr), hi = std::min(vtl, vtr);
        if (!(lo < hi)) continue;
        Rational cand = midpoint(lo, hi);
        if (sign_minus_at(cl.top, cand, e) > 0 && sign_minus_at(cr.top, cand, e) > 0 &&
            sign_minus_at(cl.bottom, cand, e) < 0 && sign_minus_at(cr.bottom, cand, e) < 0)
            return cand;
    }
    throw std::logic_error("slab route: crossing height not found");
}

// The straight chord between two points of the cell (distinct tau) stays
// strictly inside: no root of (bound - chord) in the closed tau range and
// the right strict side at the left endpoint.
bool chord_ok(const Arrangement::CellCurves& cc, const TA& p, const TA& q) {
    const TA& a = p.first < q.first ? p : q;
    const TA& b = p.first < q.first ? q : p;
    RationalFunction chord = line_through(a, b);
    auto side = [&](const RationalFunction& f, bool above) {
        IntPolynomial d = difference_numerator(f, chord);
        if (d.is_zero() || !isolate_real_roots(d, a.first, b.first).empty()) return false;
        Rational fa = f.evaluate(a.first);
        return above ? fa > a.second : fa < a.second;
    };
    return side(cc.top, true) && side(cc.bottom, false);
}

// Appends a certified polyline from `from` to `to` inside one cell
// (excluding `from`, including `to`).  Bisection through fiber midpoints;
// cells are vertically convex, so vertical moves are always safe.
void route_in_cell(const Arrangement& A, const Arrangement::Cell& cell, const TA& from,
                   const TA& to, std::vector<TA>& out, int depth = 0) {
    if (from == to) return;
    if (from.first == to.first || chord_ok(A.cell_curves(cell.slab, cell.index), from, to)) {
        out.push_back(to);
        return;
    }
    if (depth > 48) throw std::logic_error("slab route: subdivision depth exceeded");
    Rational xm = midpoint(from.first, to.first);
    auto [lo, hi] = A.cell_bounds_at(cell.slab, cell.index, xm);
    TA mid{std::move(xm), midpoint(lo, hi)};
    route_in_cell(A, cell, from, mid, out, depth + 1);
    route_in_cell(A, cell, mid, to, out, depth + 1);
}

// Index of the face cell containing p: strictly inside a slab when
// possible, else (p on an event line) the cell on either side whose fiber
// holds it strictly.
int locate_cell(const Arrangement& A, const Arrangement::FaceCells& fc, const TA& p) {
    const auto& ev = A.events();
    auto strictly_between = [&](int slab) {
        return AlgebraicReal(ev[static_cast<size_t>(slab)]).compare_to(p.first) ==
                   std::strong_ordering::less &&
               AlgebraicReal(ev[static_cast<size_t>(slab) + 1]).compare_to(p.first) ==
                   std::strong_ordering::greater;
    };
    auto fiber_holds = [&](const Arrangement::Cell& c) {
        auto [lo, hi] = A.cell_bounds_at(c.slab, c.index, p.first);
        return lo < p.second && p.second < hi;
    };
    for (size_t i = 0; i < fc.cells.size(); ++i)
        if (strictly_between(fc.cells[i].slab) && fiber_holds(fc.cells[i]))
            return static_cast<int>(i);
    for (size_t i = 0; i < fc.cells.size(); ++i) {
        const auto& c = fc.cells[i];
        bool on_side =
            AlgebraicReal(ev[static_cast<size_t>(c.slab)]).compare_to(p.first) ==
                std::strong_ordering::equal ||
            AlgebraicReal(ev[static_cast<size_t>(c.slab) + 1]).compare_to(p.first) ==
                std::strong_ordering::equal;
        if (on_side && fiber_holds(c)) return static_cast<int>(i);
    }
    throw std::logic_error("slab route: point not inside the face");
}

}  // namespace

std::vector<TA> route_in_slab_face(const SlabManifold& slab, int face, const TA& from,
                                   const TA& to) {
    const Arrangement& A = slab.arrangement();
    auto fc = A.decompose_face(face);
    int start = locate_cell(A, fc, from), goal = locate_cell(A, fc, to);

    // breadth-first search over the face's cell adjacency
    std::vector<std::vector<int>> adj(fc.cells.size());
    for (auto [a, b] : fc.adjacency) {
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    std::vector<int> prev(fc.cells.size(), -2);
    prev[static_cast<size_t>(start)] = -1;
    std::queue<int> q;
    q.push(start);
    while (!q.empty() && prev[static_cast<size_t>(goal)] == -2) {
        int c = q.front();
        q.pop();
        for (int nc : adj[static_cast<size_t>(c)])
            if (prev[static_cast<size_t>(nc)] == -2) {
                prev[static_cast<size_t>(nc)] = c;
                q.push(nc);
            }
    }
    if (prev[static_cast<size_t>(goal)] == -2)
        throw std::logic_error("slab route: face cells disconnected");
    std::vector<int> cells;
    for (int c = goal; c != -1; c = prev[static_cast<size_t>(c)]) cells.push_back(c);
    std::reverse(cells.begin(), cells.end());

    std::vector<TA> out{from};
    TA cur = from;
    for (size_t i = 0; i + 1 < cells.size(); ++i) {
        const auto& a = fc.cells[static_cast<size_t>(cells[i])];
        const auto& b = fc.cells[static_cast<size_t>(cells[i + 1])];
        bool forward = b.slab > a.slab;
        const auto& left = forward ? a : b;
        const auto& right = forward ? b : a;
        int event = right.slab;
        AlgebraicReal e = A.events()[static_cast<size_t>(event)];
        Rational height = crossing_height(A, left, right, event);

        // anchors pulled toward the event line until the straight horizontal
        // crossing is certified on both sides
        Rational tl = A.slab_sample(left.slab), tr = A.slab_sample(right.slab);
        auto cl = A.cell_curves(left.slab, left.index);
        auto cr = A.cell_curves(right.slab, right.index);
        bool done = false;
        for (int iter = 0; iter < 64 && !done; ++iter) {
            bool okl = horizontal_ok(cl, height, AlgebraicReal(tl), e, tl);
            bool okr = horizontal_ok(cr, height, e, AlgebraicReal(tr), tr);
            if (okl && okr) {
                done = true;
            } else {
                if (!okl) tl = rational_between(AlgebraicReal(tl), e);
                if (!okr) tr = rational_between(e, AlgebraicReal(tr));
            }
        }
        if (!done) throw std::logic_error("slab route: crossing anchors not found");

        TA near{forward ? tl : tr, height}, far{forward ? tr : tl, height};
        route_in_cell(A, a, cur, near, out);
        out.push_back(far);
        cur = far;
    }
    route_in_cell(A, fc.cells[static_cast<size_t>(cells.back())], cur, to, out);
    return out;
}

}  // namespace mms
