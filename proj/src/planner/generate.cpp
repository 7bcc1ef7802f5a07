#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mms/planner/planner.hpp"

namespace mms {

namespace {

const double kPi = std::acos(-1.0);

struct RoiSpec {
    RationalRotation lo, hi;
    Chart chart;
};

// Rotation interval of the given width (radians) around center.  The window
// never exceeds pi/2 + slack, so it always fits strictly inside one chart:
// chart B when it approaches the half turn, chart A otherwise.
RoiSpec make_roi(double center, double width) {
    center = std::fmod(center, 2 * kPi);
    if (center < 0) center += 2 * kPi;
    bool near_pi = std::abs(center - kPi) < width / 2 + 1e-6;
    Chart chart = near_pi ? Chart::B : Chart::A;
    double c = center;
    if (chart == Chart::A && c > kPi) c -= 2 * kPi;  // signed form, away from +-pi
    return {rotation_near(c - width / 2, 1e-9), rotation_near(c + width / 2, 1e-9), chart};
}

SegmentConstraint make_constraint(Point a, Point b, RoiSpec roi) {
    return {std::move(a), std::move(b), std::move(roi.lo), std::move(roi.hi), roi.chart};
}

Rational atom_y_at(const Segment& s, const Rational& x) {
    return s.a.y + (x - s.a.x) * (s.b.y - s.a.y) / (s.b.x - s.a.x);
}

// Random point strictly inside a face: area-weighted trapezoid pick, then a
// grid point in its fiber.  Falls back to the face's fixed sample point when
// the draws keep landing on edges.
Point sample_point_in_face(const Pslg& g, int face, Rng& rng) {
    std::vector<const Pslg::Trapezoid*> traps;
    std::vector<double> acc;
    double total = 0;
    for (const auto& t : g.trapezoids()) {
        if (t.face != face) continue;
        Rational h = (atom_y_at(g.atoms()[static_cast<size_t>(t.top)], t.xl) -
                      atom_y_at(g.atoms()[static_cast<size_t>(t.bottom)], t.xl)) +
                     (atom_y_at(g.atoms()[static_cast<size_t>(t.top)], t.xr) -
                      atom_y_at(g.atoms()[static_cast<size_t>(t.bottom)], t.xr));
        double area = (h * (t.xr - t.xl)).to_double() / 2;
        if (area <= 0) continue;
        total += area;
        traps.push_back(&t);
        acc.push_back(total);
    }
    if (traps.empty()) return g.face_sample(face);
    for (int tries = 0; tries < 8; ++tries) {
        double r = rng.uniform01() * total;
        size_t i = static_cast<size_t>(std::lower_bound(acc.begin(), acc.end(), r) - acc.begin());
        if (i >= traps.size()) i = traps.size() - 1;
        const Pslg::Trapezoid& t = *traps[i];
        Rational x = rng.uniform_rational(t.xl, t.xr);
        Rational ylo = atom_y_at(g.atoms()[static_cast<size_t>(t.bottom)], x);
        Rational yhi = atom_y_at(g.atoms()[static_cast<size_t>(t.top)], x);
        if (!(ylo < yhi)) continue;
        Point p{std::move(x), rng.uniform_rational(ylo, yhi)};
        if (g.locate(p) == t.face) return p;
    }
    return g.face_sample(face);
}

}  // namespace

SegmentConstraint generate_constraint(const ConnectivityGraph& g, const PlannerParams& p, Rng& rng,
                                      ConstructStats* stats) {
    const Box& w = g.scene().workspace;
    double roi_lo = p.roi_min > 0 ? p.roi_min : 2 * kPi / p.n_theta;
    double roi_hi = std::max(p.roi_max, roi_lo);
    auto random_point = [&] {
        return Point{rng.uniform_rational(w.xlo, w.xhi), rng.uniform_rational(w.ylo, w.yhi)};
    };

    const auto& cells = g.layer_fsc_nodes();
    bool cell_guided = p.heuristic && rng.uniform01() < p.random_threshold && !cells.empty();
    if (!cell_guided) {
        if (stats) ++stats->random_draws;
        Point a = random_point(), b = random_point();
        while (b == a) b = random_point();
        return make_constraint(a, b, make_roi(rng.uniform01() * 2 * kPi, roi_hi));
    }

    if (stats) ++stats->cell_draws;
    const FscNode& n =
        g.node(cells[static_cast<size_t>(rng.uniform_int(0, static_cast<int64_t>(cells.size()) - 1))]);
    const LayerManifold& L = g.layer(n.manifold);
    const Pslg& pslg = L.cover().pslg();
    int face = L.fsc_face(n.fsc);
    double ramp = std::clamp((n.size - p.small_cell_size) / (p.large_cell_size - p.small_cell_size),
                             0.0, 1.0);
    double width = p.roi_full ? roi_hi : std::clamp(2 * kPi * n.size, roi_lo, roi_hi);
    RoiSpec roi = make_roi(g.layer_angle(n.manifold), width);

    bool large = rng.uniform01() < ramp;
    if (!large) {
        // small cell: reach from the cell into an adjacent layer's free space
        if (stats) ++stats->small_draws;
        const LayerManifold& adj = g.layer(g.adjacent_layer(n.manifold, rng.uniform_int(0, 1) == 1));
        for (int tries = 0; tries < 32; ++tries) {
            Point a = sample_point_in_face(pslg, face, rng);
            Point b = sample_point_in_face(pslg, face, rng);
            if (a == b) continue;
            if (adj.empty() || adj.fsc_of_point(b) < 0) continue;
            return make_constraint(a, b, roi);
        }
        if (stats) ++stats->small_fallbacks;
    }

    if (stats) ++stats->large_draws;
    Point a = pslg.face_sample(face), b = a;
    for (int tries = 0; tries < 32; ++tries) {
        a = sample_point_in_face(pslg, face, rng);
        b = sample_point_in_face(pslg, face, rng);
        if (a == b) continue;
        if (pslg.segment_in_closed_face(face, a, b)) break;
        // last resort below: accept a chord that leaves the cell
    }
    if (a == b) b = Point{a.x + 1, a.y};  // degenerate cell: any direction works
    return make_constraint(a, b, roi);
}

bool filter_segment(const SegmentConstraint& c, const ConnectivityGraph& g) {
    Rational lo = *chart_tau(c.theta_lo, c.chart), hi = *chart_tau(c.theta_hi, c.chart);
    Segment seg{c.s, c.t};
    int first = -1;
    for (int li = 0; li < g.layer_count(); ++li) {
        const LayerManifold& L = g.layer(li);
        if (L.empty()) continue;
        auto tau = chart_tau(L.constraint().rotation, c.chart);
        if (!tau || !(lo < *tau && *tau < hi)) continue;
        auto cuts = L.cover().pslg().cut_parameters(seg);
        for (size_t i = 0; i + 1 < cuts.size(); ++i) {
            Point mid = c.s + midpoint(cuts[i], cuts[i + 1]) * (c.t - c.s);
            int fsc = L.fsc_of_point(mid);
            if (fsc < 0) continue;
            int comp = g.component(g.layer_node(li, fsc));
            if (first < 0)
                first = comp;
            else if (comp != first)
                return true;
        }
    }
    return false;
}

ConnectivityGraph construct_connectivity_graph(const Scene& scene, const PlannerParams& p,
                                               ConstructStats* stats) {
    if (p.n_theta < 2) throw std::invalid_argument("planner: n_theta must be at least 2");
    if (!(p.small_cell_size < p.large_cell_size))
        throw std::invalid_argument("planner: small_cell_size must be below large_cell_size");
    ConnectivityGraph g(scene);
    Rng rng(p.seed);

    std::vector<double> angles;
    for (int k = 0; k < p.n_theta; ++k)
        angles.push_back(p.random_layer_angles ? rng.uniform01() * 2 * kPi
                                               : 2 * kPi * k / p.n_theta);
    std::sort(angles.begin(), angles.end());
    for (double a : angles) {
        RationalRotation r = rotation_near(a, 1e-9);
        if (!g.find_layer(r)) g.add_layer({r});
    }

    int generated = 0;
    while (generated < p.n_segments) {
        int batch = std::min(std::max(p.batch, 1), p.n_segments - generated);
        std::vector<SegmentConstraint> kept;
        for (int i = 0; i < batch; ++i) {
            SegmentConstraint c = generate_constraint(g, p, rng, stats);
            ++generated;
            bool keep = !p.filtering || filter_segment(c, g);
            if (stats) ++(keep ? stats->kept : stats->discarded);
            if (keep) kept.push_back(std::move(c));
        }
        std::vector<std::optional<SlabManifold>> built(kept.size());
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < static_cast<int>(kept.size()); ++i)
            built[static_cast<size_t>(i)].emplace(scene, kept[static_cast<size_t>(i)]);
        for (auto& m : built) g.add_slab(std::move(*m));
    }
    if (stats) stats->generated = generated;
    return g;
}

}  // namespace mms
