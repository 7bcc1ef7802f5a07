#pragma once

#include <vector>

#include "mms/geom/polygon.hpp"
#include "mms/geom/rotation.hpp"

namespace mms {

// One placement of the robot: reference-point position and exact rotation.
struct Configuration {
    Point position;
    RationalRotation rotation;
};

// Workspace box, robot, and obstacles.  Robot vertices are relative to the
// reference point at the origin.  The box bounds the whole robot body.
struct Scene {
    Box workspace;
    Polygon robot;
    std::vector<Polygon> obstacles;

    Polygon placed(const Configuration& c) const {
        return robot.rotated(c.rotation).translated(c.position);
    }

    // Exact regularized collision test: true iff the placed robot's interior
    // meets an obstacle's interior, or the body leaves the closed workspace
    // box.  Boundary contact is free.
    bool collides(const Configuration& c) const;
};

// Closed-set intersection test for simple polygons (touching counts).
bool polygons_intersect(const Polygon& a, const Polygon& b);

// Open-set intersection test: true iff the interiors overlap.  Touching
// along edges or at vertices does not count.
bool interiors_intersect(const Polygon& a, const Polygon& b);

}  // namespace mms
