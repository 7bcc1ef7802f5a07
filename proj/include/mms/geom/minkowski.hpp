#pragma once

#include <vector>

#include "mms/geom/polygon.hpp"

namespace mms {

// Convex cover of the Minkowski sum a + b of two simple polygons: both inputs
// are triangulated and the convex pairwise sums are returned.  Their union is
// the sum; pieces overlap in general.
std::vector<Polygon> minkowski_sum_pieces(const Polygon& a, const Polygon& b);

}  // namespace mms
