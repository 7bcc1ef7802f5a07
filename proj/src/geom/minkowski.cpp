#include "mms/geom/minkowski.hpp"

namespace mms {

std::vector<Polygon> minkowski_sum_pieces(const Polygon& a, const Polygon& b) {
    std::vector<Polygon> ta = a.is_convex() ? std::vector<Polygon>{a} : a.triangulate();
    std::vector<Polygon> tb = b.is_convex() ? std::vector<Polygon>{b} : b.triangulate();
    std::vector<Polygon> out;
    out.reserve(ta.size() * tb.size());
    for (const Polygon& pa : ta)
        for (const Polygon& pb : tb) out.push_back(convex_minkowski_sum(pa, pb));
    return out;
}

}  // namespace mms
