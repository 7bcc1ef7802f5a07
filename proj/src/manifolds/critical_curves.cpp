#include "mms/manifolds/critical_curves.hpp"

#include <algorithm>

#include "mms/numeric/root_isolation.hpp"

namespace mms {

namespace {

const RationalFunction& var() {
    static const RationalFunction x{IntPolynomial{0, 1}};
    return x;
}

RationalFunction rc(const Rational& c) { return RationalFunction::constant(c); }

// c2 tau^2 + c1 tau + c0 as a rational function
RationalFunction quad(const Rational& c2, const Rational& c1, const Rational& c0) {
    return rc(c2) * var() * var() + rc(c1) * var() + rc(c0);
}

// Components of (1 + tau^2) M(tau) p, where M is the rotation by
// 2 arctan(tau); dividing by 1 + tau^2 gives the rotated point.
std::pair<RationalFunction, RationalFunction> rotated_scaled(const Point& p) {
    return {quad(-p.x, -(Rational(2) * p.y), p.x), quad(-p.y, Rational(2) * p.x, p.y)};
}

const RationalFunction& one_plus_t2() {
    static const RationalFunction d{IntPolynomial{1, 0, 1}};
    return d;
}

}  // namespace

CriticalCurve vertex_edge_curve(const Point& v, const Rational& a, const Rational& b,
                                const Rational& c, const Point& s, const Point& t) {
    CriticalCurve out;
    out.kind = ContactKind::VertexEdge;
    // residual (1 + tau^2)(a x(q) + b y(q) + c) = q(tau) alpha - p(tau)
    Rational p2 = a * (v.x - s.x) + b * (v.y - s.y) - c;
    Rational p1 = Rational(2) * (a * v.y - b * v.x);
    Rational p0 = -(a * (v.x + s.x)) - b * (v.y + s.y) - c;
    Rational q = a * (t.x - s.x) + b * (t.y - s.y);
    RationalFunction num = quad(p2, p1, p0);
    if (q.sign() == 0) {  // segment parallel to the line: contact is alpha-free
        out.degenerate = true;
        if (!num.is_zero())
            for (auto& r : isolate_real_roots(num.num())) out.contact_taus.push_back(r.root);
        return out;
    }
    out.alpha_of_tau = num / quad(q, Rational(0), q);
    return out;
}

CriticalCurve edge_vertex_curve(const Point& v1, const Point& v2, const Point& v0, const Point& s,
                                const Point& t) {
    CriticalCurve out;
    out.kind = ContactKind::EdgeVertex;
    Point dl = v2 - v1, d = t - s, u = v0 - s;
    Rational k = cross(v1, v2);
    // alpha cross(M dl, d) = cross(M dl, u) + k, multiplied through by 1 + tau^2
    RationalFunction num =
        quad(dl.y * u.x - dl.x * u.y + k, -(Rational(2) * (dl.x * u.x + dl.y * u.y)),
             dl.x * u.y - dl.y * u.x + k);
    Rational cr = cross(dl, d), dt = dot(dl, d);
    if (cr.sign() == 0 && dt.sign() == 0) {  // only possible when s == t
        out.degenerate = true;
        if (!num.is_zero())
            for (auto& r : isolate_real_roots(num.num())) out.contact_taus.push_back(r.root);
        return out;
    }
    out.alpha_of_tau = num / quad(-cr, -(Rational(2) * dt), cr);
    return out;
}

RationalFunction vertex_edge_span(const Point& v, const Point& e1, const Point& e2, const Point& s,
                                  const Point& t, const RationalFunction& alpha) {
    Point d = t - s, de = e2 - e1;
    auto [mx, my] = rotated_scaled(v);
    RationalFunction wx = rc(s.x) + alpha * rc(d.x) + mx / one_plus_t2();
    RationalFunction wy = rc(s.y) + alpha * rc(d.y) + my / one_plus_t2();
    return ((wx - rc(e1.x)) * rc(de.x) + (wy - rc(e1.y)) * rc(de.y)) / rc(dot(de, de));
}

RationalFunction edge_vertex_span(const Point& v1, const Point& v2, const Point& v0, const Point& s,
                                  const Point& t, const RationalFunction& alpha) {
    Point dl = v2 - v1, d = t - s, u = v0 - s;
    auto [mx, my] = rotated_scaled(dl);
    RationalFunction rx = mx / one_plus_t2(), ry = my / one_plus_t2();
    RationalFunction px = rc(u.x) - alpha * rc(d.x), py = rc(u.y) - alpha * rc(d.y);
    return (px * rx + py * ry - rc(dot(v1, dl))) / rc(dot(dl, dl));
}

void clip_validity(CriticalCurve& curve, const RationalFunction& span, const Rational& tau_lo,
                   const Rational& tau_hi) {
    if (curve.degenerate) {
        std::vector<AlgebraicReal> kept;
        for (AlgebraicReal& tau : curve.contact_taus) {
            if (tau.compare_to(tau_lo) == std::strong_ordering::less) continue;
            if (tau.compare_to(tau_hi) == std::strong_ordering::greater) continue;
            kept.push_back(std::move(tau));
        }
        curve.contact_taus = std::move(kept);
        return;
    }
    curve.validity.clear();
    const RationalFunction one = RationalFunction::constant(Rational(1));
    const std::vector<RationalFunction> conds{curve.alpha_of_tau, one - curve.alpha_of_tau, span,
                                              one - span};

    // Breakpoints: interval ends plus every root and pole of a condition.
    // Between consecutive breakpoints all condition signs are constant, so
    // one exact sample decides the whole open interval.
    std::vector<AlgebraicReal> bks{AlgebraicReal(tau_lo), AlgebraicReal(tau_hi)};
    for (const RationalFunction& g : conds) {
        if (g.is_zero()) continue;
        for (const IntPolynomial* p : {&g.num(), &g.den()}) {
            if (p->is_constant()) continue;
            for (auto& r : isolate_real_roots(*p, tau_lo, tau_hi)) bks.push_back(std::move(r.root));
        }
    }
    std::sort(bks.begin(), bks.end(), [](const AlgebraicReal& a, const AlgebraicReal& b) {
        return (a <=> b) == std::strong_ordering::less;
    });
    bks.erase(std::unique(bks.begin(), bks.end(),
                          [](const AlgebraicReal& a, const AlgebraicReal& b) { return a == b; }),
              bks.end());

    auto passes = [&](const Rational& x) {
        for (const RationalFunction& g : conds)
            if (!g.is_zero() && g.sign_at(x) < 0) return false;
        return true;
    };
    size_t n = bks.size();
    std::vector<char> keep(n - 1, 0);
    for (size_t i = 0; i + 1 < n; ++i)
        keep[i] = passes(rational_between(bks[i], bks[i + 1])) ? 1 : 0;
    for (size_t i = 0; i + 1 < n;) {
        if (!keep[i]) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j + 1 < n - 1 && keep[j + 1]) ++j;
        curve.validity.push_back({bks[i], bks[j + 1]});
        i = j + 1;
    }
}

}  // namespace mms
