#include <algorithm>
#include <set>

#include "mms/manifolds/manifold.hpp"

namespace mms {

// The layer meets the slab along the slab's segment at the layer's angle.
// On the layer side the segment decomposes into maximal runs through one
// free face each; on the slab side the vertical fiber at the angle's tau
// decomposes into free-face cells.  Every open overlap of a run and a cell
// joins the two FSCs, witnessed by its midpoint.
std::vector<FscPairing> intersect_layer_segment(const LayerManifold& layer,
                                                const SlabManifold& slab) {
    std::vector<FscPairing> out;
    if (layer.empty()) return out;
    auto tau = chart_tau(layer.constraint().rotation, slab.constraint().chart);
    if (!tau || !(slab.tau_lo() < *tau && *tau < slab.tau_hi())) return out;

    std::vector<Arrangement::FiberCell> fiber = slab.arrangement().fiber_faces(*tau);
    struct SlabRun {
        Rational lo, hi;
        int fsc;
    };
    std::vector<SlabRun> slab_runs;
    for (const auto& cell : fiber) {
        int fsc = slab.fsc_of_face(cell.face);
        if (fsc >= 0) slab_runs.push_back({cell.lo, cell.hi, fsc});
    }
    if (slab_runs.empty()) return out;

    const Point& s = slab.constraint().s;
    const Point& t = slab.constraint().t;
    std::vector<Rational> cuts = layer.cover().pslg().cut_parameters(Segment{s, t});
    // No need to merge runs across a grazing cut: an overlap with nonempty
    // interior always meets one of the sub-runs in an open interval, and
    // per-run witnesses stay strictly inside open faces.
    std::vector<SlabRun> layer_runs;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rational mid = midpoint(cuts[i], cuts[i + 1]);
        int fsc = layer.fsc_of_point(s + mid * (t - s));
        if (fsc >= 0) layer_runs.push_back({cuts[i], cuts[i + 1], fsc});
    }

    std::set<std::pair<int, int>> seen;
    for (const SlabRun& lr : layer_runs)
        for (const SlabRun& sr : slab_runs) {
            Rational lo = std::max(lr.lo, sr.lo), hi = std::min(lr.hi, sr.hi);
            if (!(lo < hi)) continue;
            if (!seen.insert({lr.fsc, sr.fsc}).second) continue;
            out.push_back({lr.fsc, sr.fsc, midpoint(lo, hi)});
        }
    return out;
}

}  // namespace mms
