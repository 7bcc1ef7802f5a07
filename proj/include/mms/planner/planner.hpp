#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mms/geom/scene.hpp"
#include "mms/manifolds/manifold.hpp"
#include "mms/planner/rng.hpp"

namespace mms {

// Construction knobs.  Phase 1 spreads n_theta fixed-rotation layers over
// the circle; phase 2 generates up to n_segments segment constraints, drops
// the ones that cannot merge graph components, decomposes the rest (in
// parallel batches of `batch`) and merges them into the graph.  A fixed seed
// with fixed params yields an identical graph, independent of thread count.
struct PlannerParams {
    int n_theta = 20;
    int n_segments = 512;
    // A generated constraint is a uniform random workspace segment with
    // probability 1 - random_threshold, else it is guided by a random layer
    // FSC (inside the cell, or reaching into an adjacent layer's free space
    // when the cell is small).
    double random_threshold = 0.2;
    double small_cell_size = 0.002;  // normalized sizes bounding the small/large ramp
    double large_cell_size = 0.05;
    double roi_min = 0.0;                 // min rotation-interval width; 0 = 2*pi/n_theta
    double roi_max = 1.5707963267948966;  // max rotation-interval width (pi/2)
    uint64_t seed = 1;
    bool filtering = true;   // drop constraints whose candidate FSCs sit in one component
    bool heuristic = true;   // false: every constraint uses the random procedure
    bool roi_full = false;   // always use roi_max instead of size-proportional widths
    bool random_layer_angles = false;  // random instead of evenly spaced layers
    int batch = 16;
};

enum class ManifoldKind { Layer, Slab };

// One free-space component of one manifold; the node type of the graph.
struct FscNode {
    ManifoldKind kind;
    int manifold;  // index into layers() or slabs()
    int fsc;       // FSC index inside that manifold
    // Layer: area / workspace area.  Slab: fraction of the parameter box
    // (approximate); drives constraint generation only.
    double size;
};

struct GraphEdge {
    int layer_node, slab_node;
    Configuration witness;  // exactly collision-free, interior to both FSCs
};

// Counters reported by construction (diagnostics only).
struct ConstructStats {
    int generated = 0, kept = 0, discarded = 0;
    int random_draws = 0, cell_draws = 0;
    int large_draws = 0, small_draws = 0, small_fallbacks = 0;
};

// FSC connectivity graph: layer and slab manifolds, one node per FSC, edges
// between a layer FSC and a slab FSC wherever they overlap with nonempty
// interior (each edge carries an exact witness), and union-find components.
// Edges never join two layers or two slabs: distinct layers are disjoint
// slices, and slab-slab overlap is not handled.
class ConnectivityGraph {
public:
    explicit ConnectivityGraph(Scene scene) : scene_(std::move(scene)) {}

    const Scene& scene() const { return scene_; }

    int node_count() const { return static_cast<int>(nodes_.size()); }
    const FscNode& node(int id) const { return nodes_[static_cast<size_t>(id)]; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    // Edge ids touching a node, in insertion order.
    const std::vector<int>& incident_edges(int id) const {
        return incident_[static_cast<size_t>(id)];
    }
    int component(int id) const;  // union-find root
    int component_count() const { return node_count() - merges_; }
    bool same_component(int a, int b) const { return component(a) == component(b); }

    int layer_count() const { return static_cast<int>(layers_.size()); }
    const LayerManifold& layer(int i) const { return layers_[static_cast<size_t>(i)]; }
    int slab_count() const { return static_cast<int>(slabs_.size()); }
    const SlabManifold& slab(int i) const { return slabs_[static_cast<size_t>(i)]; }

    int layer_node(int li, int fsc) const { return layer_base_[static_cast<size_t>(li)] + fsc; }
    int slab_node(int si, int fsc) const { return slab_base_[static_cast<size_t>(si)] + fsc; }
    const std::vector<int>& layer_fsc_nodes() const { return layer_fsc_nodes_; }

    double layer_angle(int li) const;  // in [0, 2*pi)
    std::optional<int> find_layer(const RationalRotation& r) const;
    // Neighbor in circular angle order; li itself when it is the only layer.
    int adjacent_layer(int li, bool next) const;

    // Builds the manifold, inserts its FSC nodes, and links it against every
    // manifold of the other kind.  Returns the manifold index.
    int add_layer(AngleConstraint c);
    int add_slab(SlabManifold m);
    int add_slab(SegmentConstraint c) { return add_slab(SlabManifold(scene_, std::move(c))); }

private:
    Scene scene_;
    std::vector<LayerManifold> layers_;
    std::vector<SlabManifold> slabs_;
    std::vector<int> layer_base_, slab_base_;  // first node id per manifold
    std::vector<FscNode> nodes_;
    std::vector<GraphEdge> edges_;
    std::vector<std::vector<int>> incident_;
    std::vector<int> layer_fsc_nodes_;
    mutable std::vector<int> parent_;  // union-find over nodes (path halving)
    std::vector<int> rank_;
    int merges_ = 0;

    int new_node(FscNode n);
    void link(int li, int si);
    void unite(int a, int b);
};

// One segment constraint per Generate Segment Constraint: random workspace
// segment, or a segment guided by a random layer FSC with a rotation
// interval centered at that layer's angle.
SegmentConstraint generate_constraint(const ConnectivityGraph& g, const PlannerParams& p, Rng& rng,
                                      ConstructStats* stats = nullptr);

// Keep (true) iff the layer FSCs whose angle lies strictly inside the
// constraint's rotation interval and whose region meets the segment over
// positive length span at least two graph components.  Discarding is
// conservative: a discarded constraint's slab can only link FSCs inside one
// component.
bool filter_segment(const SegmentConstraint& c, const ConnectivityGraph& g);

// Exploration phase (layers) followed by the connection phase (generate ->
// filter -> decompose -> merge); see PlannerParams.
ConnectivityGraph construct_connectivity_graph(const Scene& scene, const PlannerParams& p,
                                               ConstructStats* stats = nullptr);

enum class LegKind { LayerTranslation, SlabMotion };

// One per-FSC piece of a path.  A layer leg translates along the waypoint
// polyline at the layer's fixed rotation.  A slab leg moves piecewise
// straight in the slab's (tau, alpha) parameters; params holds those
// coordinates, waypoints the matching configurations.
struct PathLeg {
    LegKind kind;
    int manifold, fsc;
    std::vector<Configuration> waypoints;  // nonempty; junctions shared between legs
    std::vector<std::pair<Rational, Rational>> params;  // slab legs only
    std::optional<SegmentConstraint> constraint;        // slab legs only
};

struct Path {
    std::vector<PathLeg> legs;
    std::vector<Configuration> waypoints() const;  // flattened, junctions deduplicated
};

// Graph search between the FSCs holding q_s and q_t (layers at their
// rotations are built and kept if absent), then per-FSC local paths: layer
// legs via the visibility shortest path, slab legs via the face's cell
// decomposition.  nullopt when no graph path exists; throws "invalid query"
// if an endpoint collides.
std::optional<Path> query(ConnectivityGraph& g, const Configuration& q_s,
                          const Configuration& q_t);

struct PathViolation {
    int leg, segment;  // leg index, waypoint interval inside the leg
    Configuration at;  // first colliding sampled configuration
};

// Exact collision audit: samples every leg at >= samples_per_leg rational
// parameter points (legs are straight in their manifold parameters) and
// reports the first collision, or nullopt when the path is clean.
std::optional<PathViolation> path_validate(const Scene& scene, const Path& path,
                                           int samples_per_leg);

// Exactly certified polyline in (tau, alpha) between two points of one free
// face, routed over the face's vertical cell decomposition.  Every returned
// segment stays inside the open face (endpoints included).
std::vector<std::pair<Rational, Rational>> route_in_slab_face(
    const SlabManifold& slab, int face, const std::pair<Rational, Rational>& from,
    const std::pair<Rational, Rational>& to);

}  // namespace mms
