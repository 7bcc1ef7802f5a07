#include <stdexcept>

#include "mms/manifolds/manifold.hpp"

namespace mms {

SlabManifold::SlabManifold(const Scene& scene, SegmentConstraint c) : c_(std::move(c)) {
    if (c_.s == c_.t) throw std::invalid_argument("slab: degenerate segment");
    auto lo = chart_tau(c_.theta_lo, c_.chart), hi = chart_tau(c_.theta_hi, c_.chart);
    if (!lo || !hi) throw std::invalid_argument("slab: rotation bound outside chart");
    tau_lo_ = *lo;
    tau_hi_ = *hi;
    if (!(tau_lo_ < tau_hi_)) throw std::invalid_argument("slab: empty rotation interval");

    // In chart B the body is pre-rotated by the half turn; curves then see
    // plain tau rotations in both charts.
    Polygon body = c_.chart == Chart::A ? scene.robot
                                        : scene.robot.rotated(RationalRotation::half_turn());

    // Environment features: obstacle edges and vertices, plus the workspace
    // rim (vertices crossing a box edge end containment; box corners are
    // included for uniformity).
    struct EdgeFeat {
        Point e1, e2;
        int obstacle, index;
    };
    struct VertFeat {
        Point v;
        int obstacle, index;
    };
    std::vector<EdgeFeat> edges;
    std::vector<VertFeat> verts;
    for (size_t oi = 0; oi < scene.obstacles.size(); ++oi) {
        const Polygon& o = scene.obstacles[oi];
        for (int i = 0; i < o.size(); ++i) {
            Segment e = o.edge(i);
            edges.push_back({e.a, e.b, static_cast<int>(oi), i});
            verts.push_back({o.vertex(i), static_cast<int>(oi), i});
        }
    }
    const Box& w = scene.workspace;
    const Point corner[4] = {{w.xlo, w.ylo}, {w.xhi, w.ylo}, {w.xhi, w.yhi}, {w.xlo, w.yhi}};
    for (int i = 0; i < 4; ++i) {
        edges.push_back({corner[i], corner[(i + 1) % 4], CriticalCurve::kBoxObstacle, i});
        verts.push_back({corner[i], CriticalCurve::kBoxObstacle, i});
    }

    auto keep = [&](CriticalCurve&& cc) {
        if (cc.degenerate ? !cc.contact_taus.empty() : !cc.validity.empty())
            curves_.push_back(std::move(cc));
    };
    for (int i = 0; i < body.size(); ++i) {
        const Point& v = body.vertex(i);
        for (const EdgeFeat& ef : edges) {
            Rational a = ef.e1.y - ef.e2.y, b = ef.e2.x - ef.e1.x;
            Rational cl = cross(ef.e1, ef.e2);
            CriticalCurve cc = vertex_edge_curve(v, a, b, cl, c_.s, c_.t);
            cc.robot_feature = i;
            cc.obstacle_index = ef.obstacle;
            cc.obstacle_feature = ef.index;
            RationalFunction span;
            if (!cc.degenerate)
                span = vertex_edge_span(v, ef.e1, ef.e2, c_.s, c_.t, cc.alpha_of_tau);
            clip_validity(cc, span, tau_lo_, tau_hi_);
            keep(std::move(cc));
        }
    }
    for (int i = 0; i < body.size(); ++i) {
        Segment e = body.edge(i);
        for (const VertFeat& vf : verts) {
            CriticalCurve cc = edge_vertex_curve(e.a, e.b, vf.v, c_.s, c_.t);
            cc.robot_feature = i;
            cc.obstacle_index = vf.obstacle;
            cc.obstacle_feature = vf.index;
            RationalFunction span;
            if (!cc.degenerate) span = edge_vertex_span(e.a, e.b, vf.v, c_.s, c_.t, cc.alpha_of_tau);
            clip_validity(cc, span, tau_lo_, tau_hi_);
            keep(std::move(cc));
        }
    }

    std::vector<XMonotoneArc> arcs;
    std::vector<AlgebraicReal> walls;
    for (const CriticalCurve& cc : curves_) {
        if (cc.degenerate) {
            for (const AlgebraicReal& tau : cc.contact_taus) walls.push_back(tau);
            continue;
        }
        for (const auto& [l, r] : cc.validity) arcs.push_back({cc.alpha_of_tau, l, r});
    }
    arr_.emplace(arcs, std::move(walls), Box{tau_lo_, Rational(0), tau_hi_, Rational(1)});

    // One exact collision test decides each face: the curves carry every
    // contact, so status is constant per face.
    face_to_fsc_.assign(static_cast<size_t>(arr_->face_count()), -1);
    for (int f = 1; f < arr_->face_count(); ++f) {
        auto [tau, alpha] = arr_->face_sample_point(f);
        if (scene.collides(configuration_at(tau, alpha))) continue;
        face_to_fsc_[static_cast<size_t>(f)] = static_cast<int>(faces_.size());
        faces_.push_back(f);
    }

    // Approximate face areas: per sweep cell, height at the slab sample
    // times the slab width, normalized by the slab box area.
    std::vector<double> area(static_cast<size_t>(arr_->face_count()), 0.0);
    const auto& ev = arr_->events();
    for (int s = 0; s < arr_->slab_count(); ++s) {
        double width = ev[static_cast<size_t>(s) + 1].to_double() -
                       ev[static_cast<size_t>(s)].to_double();
        for (int cell = 0; cell < arr_->cell_count(s); ++cell) {
            auto [blo, bhi] = arr_->cell_bounds_at(s, cell, arr_->slab_sample(s));
            area[static_cast<size_t>(arr_->cell_face(s, cell))] +=
                width * (bhi - blo).to_double();
        }
    }
    double total = (tau_hi_ - tau_lo_).to_double();
    for (int f : faces_) sizes_.push_back(area[static_cast<size_t>(f)] / total);
}

int SlabManifold::fsc_of_face(int face) const {
    if (face < 0 || face >= static_cast<int>(face_to_fsc_.size())) return -1;
    return face_to_fsc_[static_cast<size_t>(face)];
}

Configuration SlabManifold::configuration_at(const Rational& tau, const Rational& alpha) const {
    return {c_.s + alpha * (c_.t - c_.s), chart_rotation(tau, c_.chart)};
}

}  // namespace mms
