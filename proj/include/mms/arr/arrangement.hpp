#pragma once

#include <utility>
#include <vector>

#include "mms/curves/arcs.hpp"
#include "mms/curves/rational_function.hpp"
#include "mms/geom/point.hpp"
#include "mms/numeric/algebraic_real.hpp"

namespace mms {

// Exact arrangement of x-monotone rational-function arcs clipped to a box,
// built by a sweep over event x-coordinates (arc endpoints, pairwise
// intersections, box-boundary crossings).  Between consecutive events the
// active arcs keep one fixed vertical order, so the box splits into slabs of
// curve-bounded cells; faces are cells glued across events wherever their
// open y-intervals at the event line overlap.  Identical overlapping arcs
// are merged during construction.  Completed arrangements are immutable and
// safe for concurrent queries.
class Arrangement {
public:
    Arrangement(const std::vector<XMonotoneArc>& arcs, Box box);
    // Walls are forced full-height vertical cut lines: each becomes a chain
    // of vertical edges from rim to rim (crossing every arc at a vertex), and
    // faces never glue across one.  Walls outside the open x-range are
    // dropped.
    Arrangement(const std::vector<XMonotoneArc>& arcs, std::vector<AlgebraicReal> walls, Box box);

    const Box& box() const { return box_; }
    static constexpr int kOuterFace = 0;
    // Face ids: 0 is the unbounded outside; interior faces are 1..face_count()-1.
    int face_count() const { return face_count_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return edge_count_; }
    // Connected components of the embedded graph (rim plus arcs).  The Euler
    // identity is V - E + F = 1 + graph_components(); arcs that all reach
    // the box boundary give one component and the familiar V - E + F = 2.
    int graph_components() const { return graph_components_; }

    enum class Hit { Face, Edge, Vertex };
    struct Location {
        Hit kind;
        int id;  // face id, piece id (-1 for a box edge), or vertex id
    };
    // Exact location of a point of the closed box; throws outside it.
    Location locate(const Rational& x, const Rational& y) const;

    struct FiberCell {
        Rational lo, hi;  // open y-interval
        int face;
    };
    // Faces crossed by the vertical line x = x0, bottom to top.  x0 must be
    // strictly inside the x-range and off every event; an event x0 throws
    // "degenerate fiber" (see fiber_faces for the tolerant variant).
    std::vector<FiberCell> vertical_fiber(const Rational& x0) const;
    // Tolerant fiber: also answers exactly on an event line by locating
    // between the cut values there.  x0 strictly inside the x-range.
    std::vector<FiberCell> fiber_faces(const Rational& x0) const;

    // Rational point strictly inside an interior face.
    std::pair<Rational, Rational> face_sample_point(int f) const;

    struct Cell {
        int slab, index;  // index counts from the bottom of the slab
        int face;
        Rational x, y;  // rational representative strictly inside
    };
    struct FaceCells {
        std::vector<Cell> cells;
        std::vector<std::pair<int, int>> adjacency;  // indexes into cells
    };
    // Vertical (pseudo-trapezoidal) decomposition of one interior face with
    // its cell-adjacency graph.
    FaceCells decompose_face(int f) const;

    // One vertex: exact x, and y either rational or the value of a curve at
    // x.  For comparing arrangements in structure tests.
    struct Vertex {
        AlgebraicReal x;
        bool y_is_rational;
        Rational y_rat;
        RationalFunction y_curve;
    };
    const std::vector<Vertex>& vertices() const { return vertices_; }

    // Slab plumbing (events ascending; slab s spans events s..s+1).
    int slab_count() const { return static_cast<int>(events_.size()) - 1; }
    const std::vector<AlgebraicReal>& events() const { return events_; }
    bool event_is_wall(int e) const { return event_wall_[static_cast<size_t>(e)] != 0; }
    const Rational& slab_sample(int s) const { return slab_sample_[static_cast<size_t>(s)]; }
    int cell_count(int s) const;
    int cell_face(int s, int c) const;
    // Lower/upper bound values of a cell at x, which must lie in the slab's
    // closure; box bounds where the cell is rim-bounded.
    std::pair<Rational, Rational> cell_bounds_at(int s, int c, const Rational& x) const;
    struct CellCurves {
        RationalFunction bottom, top;  // constant functions where rim-bounded
    };
    // Bounding curves of a cell, pole-free on the slab's closure.
    CellCurves cell_curves(int s, int c) const;

private:
    struct Piece {
        RationalFunction f;
        AlgebraicReal left, right;
        int left_event = -1, right_event = -1;
        // why the piece stops: box side, curve crossing a y-bound, or the
        // arc's own endpoint
        enum class Stop { BoxSide, Bottom, Top, Arc };
        Stop left_stop = Stop::Arc, right_stop = Stop::Arc;
    };

    Box box_;
    std::vector<Piece> pieces_;
    std::vector<AlgebraicReal> events_;
    std::vector<char> event_wall_;                              // event is a forced cut line
    std::vector<std::vector<std::pair<int, int>>> event_tags_;  // intersecting piece pairs
    std::vector<Rational> slab_sample_;
    std::vector<std::vector<int>> slab_actives_;  // piece ids bottom to top
    std::vector<std::vector<int>> slab_pos_;      // piece id -> position, -1 inactive
    std::vector<int> cell_offset_;                // global cell id = offset[slab] + index
    std::vector<int> cell_face_;                  // by global cell id
    std::vector<std::vector<std::pair<int, int>>> glued_;  // per interior event: cell index pairs
    std::vector<Vertex> vertices_;
    int face_count_ = 0;
    int edge_count_ = 0;
    int graph_components_ = 1;

    std::vector<int> vertex_event_begin_;  // vertices_ range per event

    void build_vertices_and_edges();
    int event_of(const Rational& x) const;  // -1 if not an event
    bool tagged(int e, int a, int b) const;
    // value order of two bounds (piece ids or the horizontal box edges) on
    // the event line e
    int compare_at_event(int a, int b, int e) const;
    int piece_vs_bound(int pi, bool bottom, int e) const;
    int slab_of(const Rational& x) const;  // requires xlo < x < xhi and off events
    int find_vertex_id(int e, const Rational& y) const;
};

// Lexicographic (x, y) vertex order; works across arrangements, for
// structure-equality tests.
int compare_arrangement_vertices(const Arrangement::Vertex& a, const Arrangement::Vertex& b);

}  // namespace mms
