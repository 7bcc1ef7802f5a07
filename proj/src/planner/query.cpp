#include <queue>
#include <stdexcept>

#include "mms/planner/planner.hpp"

namespace mms {

namespace {

PathLeg layer_leg(const ConnectivityGraph& g, int node, const Point& from, const Point& to) {
    const FscNode& n = g.node(node);
    const LayerManifold& L = g.layer(n.manifold);
    PathLeg leg{LegKind::LayerTranslation, n.manifold, n.fsc, {}, {}, std::nullopt};
    auto polyline = L.cover().pslg().visibility_shortest_path(L.fsc_face(n.fsc), from, to);
    for (Point& p : polyline) leg.waypoints.push_back(L.configuration_at(p));
    return leg;
}

std::pair<Rational, Rational> slab_params(const SlabManifold& S, const Configuration& c) {
    const SegmentConstraint& sc = S.constraint();
    Point d = sc.t - sc.s;
    return {*chart_tau(c.rotation, sc.chart), dot(c.position - sc.s, d) / dot(d, d)};
}

PathLeg slab_leg(const ConnectivityGraph& g, int node, const Configuration& from,
                 const Configuration& to) {
    const FscNode& n = g.node(node);
    const SlabManifold& S = g.slab(n.manifold);
    PathLeg leg{LegKind::SlabMotion, n.manifold, n.fsc, {}, {}, S.constraint()};
    leg.params = route_in_slab_face(S, S.fsc_face(n.fsc), slab_params(S, from), slab_params(S, to));
    for (const auto& [tau, alpha] : leg.params) leg.waypoints.push_back(S.configuration_at(tau, alpha));
    return leg;
}

PathLeg make_leg(const ConnectivityGraph& g, int node, const Configuration& from,
                 const Configuration& to) {
    return g.node(node).kind == ManifoldKind::Layer
               ? layer_leg(g, node, from.position, to.position)
               : slab_leg(g, node, from, to);
}

int ensure_layer(ConnectivityGraph& g, const RationalRotation& r) {
    if (auto li = g.find_layer(r)) return *li;
    return g.add_layer({r});
}

}  // namespace

std::optional<Path> query(ConnectivityGraph& g, const Configuration& q_s,
                          const Configuration& q_t) {
    if (g.scene().collides(q_s) || g.scene().collides(q_t))
        throw std::runtime_error("invalid query");
    int ls = ensure_layer(g, q_s.rotation);
    int lt = ensure_layer(g, q_t.rotation);
    int fs = g.layer(ls).fsc_of_point(q_s.position);
    int ft = g.layer(lt).fsc_of_point(q_t.position);
    // collision-free but edge-touching endpoints anchor no open FSC
    if (fs < 0 || ft < 0) return std::nullopt;
    int start = g.layer_node(ls, fs), goal = g.layer_node(lt, ft);

    std::vector<int> via(static_cast<size_t>(g.node_count()), -2);  // incoming edge id
    via[static_cast<size_t>(start)] = -1;
    std::queue<int> q;
    q.push(start);
    while (!q.empty() && via[static_cast<size_t>(goal)] == -2) {
        int c = q.front();
        q.pop();
        for (int eid : g.incident_edges(c)) {
            const GraphEdge& e = g.edges()[static_cast<size_t>(eid)];
            int other = e.layer_node == c ? e.slab_node : e.layer_node;
            if (via[static_cast<size_t>(other)] != -2) continue;
            via[static_cast<size_t>(other)] = eid;
            q.push(other);
        }
    }
    if (via[static_cast<size_t>(goal)] == -2) return std::nullopt;

    std::vector<int> nodes{goal};
    std::vector<int> edge_ids;
    for (int c = goal; via[static_cast<size_t>(c)] != -1;) {
        int eid = via[static_cast<size_t>(c)];
        const GraphEdge& e = g.edges()[static_cast<size_t>(eid)];
        edge_ids.push_back(eid);
        c = e.layer_node == c ? e.slab_node : e.layer_node;
        nodes.push_back(c);
    }
    std::reverse(nodes.begin(), nodes.end());
    std::reverse(edge_ids.begin(), edge_ids.end());

    Path path;
    Configuration cur = q_s;
    for (size_t i = 0; i < edge_ids.size(); ++i) {
        const Configuration& w = g.edges()[static_cast<size_t>(edge_ids[i])].witness;
        path.legs.push_back(make_leg(g, nodes[i], cur, w));
        cur = w;
    }
    path.legs.push_back(make_leg(g, nodes.back(), cur, q_t));
    return path;
}

std::optional<PathViolation> path_validate(const Scene& scene, const Path& path,
                                           int samples_per_leg) {
    if (samples_per_leg < 1) throw std::invalid_argument("path_validate: need at least one sample");
    for (size_t li = 0; li < path.legs.size(); ++li) {
        const PathLeg& leg = path.legs[li];
        if (leg.waypoints.empty()) throw std::invalid_argument("path_validate: empty leg");
        bool slab = leg.kind == LegKind::SlabMotion;
        if (slab && (!leg.constraint || leg.params.size() != leg.waypoints.size()))
            throw std::invalid_argument("path_validate: malformed slab leg");
        int m = static_cast<int>(leg.waypoints.size()) - 1;
        if (m == 0) {
            if (scene.collides(leg.waypoints[0]))
                return PathViolation{static_cast<int>(li), 0, leg.waypoints[0]};
            continue;
        }
        int per = (samples_per_leg + m - 1) / m;
        for (int s = 0; s < m; ++s) {
            for (int j = 0; j <= per; ++j) {
                Rational u(j, per);
                Configuration c;
                if (slab) {
                    const auto& [t0, a0] = leg.params[static_cast<size_t>(s)];
                    const auto& [t1, a1] = leg.params[static_cast<size_t>(s) + 1];
                    const SegmentConstraint& sc = *leg.constraint;
                    c = {sc.s + (a0 + u * (a1 - a0)) * (sc.t - sc.s),
                         chart_rotation(t0 + u * (t1 - t0), sc.chart)};
                } else {
                    const Configuration& a = leg.waypoints[static_cast<size_t>(s)];
                    const Configuration& b = leg.waypoints[static_cast<size_t>(s) + 1];
                    if (!(a.rotation == b.rotation))
                        throw std::invalid_argument("path_validate: rotation drift in layer leg");
                    c = {a.position + u * (b.position - a.position), a.rotation};
                }
                if (scene.collides(c)) return PathViolation{static_cast<int>(li), s, c};
            }
        }
    }
    return std::nullopt;
}

}  // namespace mms
