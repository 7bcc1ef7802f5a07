#pragma once

#include <optional>
#include <vector>

#include "mms/arr/arrangement.hpp"
#include "mms/geom/region_cover.hpp"
#include "mms/geom/scene.hpp"
#include "mms/manifolds/constraints.hpp"
#include "mms/manifolds/critical_curves.hpp"

namespace mms {

// Free-space slice at one fixed rotation: the workspace box shrunk so the
// whole rotated body fits, minus the obstacles grown by the reflected body.
// Each free face of the cover is one free-space component (FSC); every point
// of an FSC is an exactly collision-free placement.
class LayerManifold {
public:
    LayerManifold(const Scene& scene, AngleConstraint c);

    const AngleConstraint& constraint() const { return c_; }
    // Where the reference point may go so the body stays inside the box.
    const Box& eroded_box() const { return eroded_; }
    // True when the body does not fit in the box at this rotation at all.
    bool empty() const { return !cover_.has_value(); }
    const RegionCover& cover() const { return *cover_; }

    int fsc_count() const { return static_cast<int>(faces_.size()); }
    int fsc_face(int i) const { return faces_[static_cast<size_t>(i)]; }
    const Rational& fsc_area(int i) const { return areas_[static_cast<size_t>(i)]; }
    // FSC index of the face, or -1 when the face is blocked or foreign.
    int fsc_of_face(int face) const;
    // FSC whose open face contains p, or -1.
    int fsc_of_point(const Point& p) const;

    Configuration configuration_at(const Point& p) const { return {p, c_.rotation}; }

private:
    AngleConstraint c_;
    Box eroded_;
    std::optional<RegionCover> cover_;
    std::vector<int> faces_;       // FSC index -> cover face id
    std::vector<Rational> areas_;
    std::vector<int> face_to_fsc_;
};

// Free-space slice over one position segment and rotation interval, in slab
// coordinates (tau, alpha) on (tau_lo, tau_hi) x (0, 1).  The critical
// curves of all robot-feature x environment-feature contacts cut the slab
// into faces of constant collision status; the free ones are the FSCs.
class SlabManifold {
public:
    SlabManifold(const Scene& scene, SegmentConstraint c);

    const SegmentConstraint& constraint() const { return c_; }
    const Rational& tau_lo() const { return tau_lo_; }
    const Rational& tau_hi() const { return tau_hi_; }
    const Arrangement& arrangement() const { return *arr_; }
    const std::vector<CriticalCurve>& curves() const { return curves_; }

    int fsc_count() const { return static_cast<int>(faces_.size()); }
    int fsc_face(int i) const { return faces_[static_cast<size_t>(i)]; }
    // Area fraction of the slab box covered by the FSC (approximate; used
    // only as a sampling weight).
    double fsc_size(int i) const { return sizes_[static_cast<size_t>(i)]; }
    int fsc_of_face(int face) const;
    bool face_free(int face) const { return fsc_of_face(face) >= 0; }

    Configuration configuration_at(const Rational& tau, const Rational& alpha) const;

private:
    SegmentConstraint c_;
    Rational tau_lo_, tau_hi_;
    std::vector<CriticalCurve> curves_;
    std::optional<Arrangement> arr_;
    std::vector<int> faces_;
    std::vector<double> sizes_;
    std::vector<int> face_to_fsc_;
};

struct FscPairing {
    int layer_fsc = -1, slab_fsc = -1;
    Rational alpha;  // witness position parameter on the slab's segment
};

// FSC pairs of a layer and a slab whose overlap on the slab's segment at the
// layer's rotation has nonempty interior, each with a witness alpha strictly
// inside both; the witness placement is exactly collision-free.  Empty when
// the layer's rotation is outside the slab's open rotation interval (or at
// an angle the slab's chart cannot represent).
std::vector<FscPairing> intersect_layer_segment(const LayerManifold& layer,
                                                const SlabManifold& slab);

}  // namespace mms
