#pragma once

#include <vector>

#include "mms/geom/polygon.hpp"
#include "mms/geom/pslg.hpp"

namespace mms {

// Arrangement of a union of convex polygons inside a box, with every face
// classified blocked (inside some piece, or outside the box, or the box rim)
// or free.  The free set is open: piece boundaries and the box boundary do
// not belong to it.
class RegionCover {
public:
    RegionCover(std::vector<Polygon> pieces, Box box);

    const Pslg& pslg() const { return pslg_; }
    const std::vector<Polygon>& pieces() const { return pieces_; }

    bool face_free(int f) const { return free_[static_cast<size_t>(f)] != 0; }
    // Face id if p lies in a free face, else -1.
    int free_face_of(const Point& p) const;
    bool point_free(const Point& p) const { return free_face_of(p) >= 0; }

    int free_face_count() const { return free_face_count_; }
    Rational free_area() const;
    Rational blocked_area() const;  // inside the box only

private:
    std::vector<Polygon> pieces_;
    Pslg pslg_;
    std::vector<char> free_;
    int free_face_count_ = 0;
};

}  // namespace mms
