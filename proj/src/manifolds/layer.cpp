#include "mms/geom/minkowski.hpp"
#include "mms/manifolds/manifold.hpp"

namespace mms {

LayerManifold::LayerManifold(const Scene& scene, AngleConstraint c) : c_(std::move(c)) {
    Polygon body = scene.robot.rotated(c_.rotation);
    Box rb = body.bbox();
    const Box& w = scene.workspace;
    eroded_ = {w.xlo - rb.xlo, w.ylo - rb.ylo, w.xhi - rb.xhi, w.yhi - rb.yhi};
    if (!(eroded_.xlo < eroded_.xhi && eroded_.ylo < eroded_.yhi)) return;

    Polygon reflected = body.negated();
    std::vector<Polygon> pieces;
    for (const Polygon& o : scene.obstacles)
        for (Polygon& p : minkowski_sum_pieces(reflected, o)) pieces.push_back(std::move(p));
    cover_.emplace(std::move(pieces), eroded_);

    face_to_fsc_.assign(static_cast<size_t>(cover_->pslg().face_count()), -1);
    for (int f = 1; f < cover_->pslg().face_count(); ++f) {
        if (!cover_->face_free(f)) continue;
        face_to_fsc_[static_cast<size_t>(f)] = static_cast<int>(faces_.size());
        faces_.push_back(f);
        areas_.push_back(cover_->pslg().face_area(f));
    }
}

int LayerManifold::fsc_of_face(int face) const {
    if (empty() || face < 0 || face >= static_cast<int>(face_to_fsc_.size())) return -1;
    return face_to_fsc_[static_cast<size_t>(face)];
}

int LayerManifold::fsc_of_point(const Point& p) const {
    if (empty() || !eroded_.strictly_contains(p)) return -1;
    return fsc_of_face(cover_->free_face_of(p));
}

}  // namespace mms
