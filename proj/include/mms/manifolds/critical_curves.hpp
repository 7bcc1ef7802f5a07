#pragma once

#include <utility>
#include <vector>

#include "mms/curves/rational_function.hpp"
#include "mms/geom/point.hpp"
#include "mms/numeric/algebraic_real.hpp"

namespace mms {

enum class ContactKind { VertexEdge, EdgeVertex };

// Locus of placements, with the reference point at s + alpha (t - s) and the
// rotation at angle 2 arctan(tau), where one robot feature touches one
// environment feature: a curve alpha(tau) in slab coordinates.  A curve is
// degenerate when the contact does not depend on alpha (the segment runs
// parallel to the touched line); it then lists the discrete taus where
// contact happens, which become vertical cut lines of the slab.
struct CriticalCurve {
    RationalFunction alpha_of_tau;
    ContactKind kind = ContactKind::VertexEdge;
    int robot_feature = -1;     // vertex index (VertexEdge) or edge index (EdgeVertex)
    int obstacle_index = -1;    // kBoxObstacle for the workspace rim
    int obstacle_feature = -1;  // edge index (VertexEdge) or vertex index (EdgeVertex)
    bool degenerate = false;
    std::vector<AlgebraicReal> contact_taus;  // degenerate curves only
    // Closed tau-intervals where the contact point stays on the finite
    // features and alpha stays in [0, 1]; free of poles of alpha_of_tau.
    std::vector<std::pair<AlgebraicReal, AlgebraicReal>> validity;

    static constexpr int kBoxObstacle = -2;
};

// Contact of robot vertex v (body frame) with the line a x + b y + c = 0.
CriticalCurve vertex_edge_curve(const Point& v, const Rational& a, const Rational& b,
                                const Rational& c, const Point& s, const Point& t);

// Contact of the supporting line of robot edge v1 -> v2 (body frame) with
// the environment point v0.
CriticalCurve edge_vertex_curve(const Point& v1, const Point& v2, const Point& v0, const Point& s,
                                const Point& t);

// Parameter of the contact point along the finite environment edge e1 -> e2
// (0 and 1 at the endpoints), as a function of tau on the curve alpha(tau).
RationalFunction vertex_edge_span(const Point& v, const Point& e1, const Point& e2, const Point& s,
                                  const Point& t, const RationalFunction& alpha);

// Parameter of v0 along the finite placed robot edge v1 -> v2.
RationalFunction edge_vertex_span(const Point& v1, const Point& v2, const Point& v0, const Point& s,
                                  const Point& t, const RationalFunction& alpha);

// Intersects alpha in [0, 1], span in [0, 1] and tau in [tau_lo, tau_hi] and
// stores the resulting closed intervals in curve.validity; isolated
// single-tau solutions are dropped.  Degenerate curves instead keep the
// contact taus inside the range (span is ignored).
void clip_validity(CriticalCurve& curve, const RationalFunction& span, const Rational& tau_lo,
                   const Rational& tau_hi);

}  // namespace mms
