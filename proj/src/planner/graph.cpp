#include <algorithm>
#include <cmath>
#include <utility>

#include "mms/planner/planner.hpp"

namespace mms {

int ConnectivityGraph::component(int id) const {
    int x = id;
    while (parent_[static_cast<size_t>(x)] != x) {
        parent_[static_cast<size_t>(x)] =
            parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
        x = parent_[static_cast<size_t>(x)];
    }
    return x;
}

int ConnectivityGraph::new_node(FscNode n) {
    int id = node_count();
    nodes_.push_back(n);
    incident_.emplace_back();
    parent_.push_back(id);
    rank_.push_back(0);
    return id;
}

void ConnectivityGraph::unite(int a, int b) {
    int ra = component(a), rb = component(b);
    if (ra == rb) return;
    // smaller id wins ties so root names are insertion-order stable
    if (rank_[static_cast<size_t>(ra)] < rank_[static_cast<size_t>(rb)] ||
        (rank_[static_cast<size_t>(ra)] == rank_[static_cast<size_t>(rb)] && rb < ra))
        std::swap(ra, rb);
    parent_[static_cast<size_t>(rb)] = ra;
    if (rank_[static_cast<size_t>(ra)] == rank_[static_cast<size_t>(rb)])
        ++rank_[static_cast<size_t>(ra)];
    ++merges_;
}

double ConnectivityGraph::layer_angle(int li) const {
    double a = layer(li).constraint().rotation.angle();
    const double two_pi = 2 * std::acos(-1.0);
    if (a < 0) a += two_pi;
    return a;
}

std::optional<int> ConnectivityGraph::find_layer(const RationalRotation& r) const {
    for (int li = 0; li < layer_count(); ++li)
        if (layer(li).constraint().rotation == r) return li;
    return std::nullopt;
}

int ConnectivityGraph::adjacent_layer(int li, bool next) const {
    std::vector<std::pair<double, int>> order;
    order.reserve(static_cast<size_t>(layer_count()));
    for (int i = 0; i < layer_count(); ++i) order.emplace_back(layer_angle(i), i);
    std::sort(order.begin(), order.end());
    int pos = 0;
    for (int i = 0; i < static_cast<int>(order.size()); ++i)
        if (order[static_cast<size_t>(i)].second == li) pos = i;
    int n = static_cast<int>(order.size());
    int step = next ? 1 : n - 1;
    return order[static_cast<size_t>((pos + step) % n)].second;
}

int ConnectivityGraph::add_layer(AngleConstraint c) {
    int li = layer_count();
    layers_.push_back(LayerManifold(scene_, std::move(c)));
    const LayerManifold& L = layers_.back();
    layer_base_.push_back(node_count());
    Rational ws_area = (scene_.workspace.xhi - scene_.workspace.xlo) *
                       (scene_.workspace.yhi - scene_.workspace.ylo);
    for (int f = 0; f < L.fsc_count(); ++f) {
        double size = (L.fsc_area(f) / ws_area).to_double();
        layer_fsc_nodes_.push_back(new_node({ManifoldKind::Layer, li, f, size}));
    }
    for (int si = 0; si < slab_count(); ++si) link(li, si);
    return li;
}

int ConnectivityGraph::add_slab(SlabManifold m) {
    int si = slab_count();
    slabs_.push_back(std::move(m));
    const SlabManifold& S = slabs_.back();
    slab_base_.push_back(node_count());
    for (int f = 0; f < S.fsc_count(); ++f)
        new_node({ManifoldKind::Slab, si, f, S.fsc_size(f)});
    for (int li = 0; li < layer_count(); ++li) link(li, si);
    return si;
}

void ConnectivityGraph::link(int li, int si) {
    const LayerManifold& L = layers_[static_cast<size_t>(li)];
    const SlabManifold& S = slabs_[static_cast<size_t>(si)];
    auto pairs = intersect_layer_segment(L, S);
    if (pairs.empty()) return;
    Rational tau = *chart_tau(L.constraint().rotation, S.constraint().chart);
    for (const FscPairing& pr : pairs) {
        int a = layer_node(li, pr.layer_fsc);
        int b = slab_node(si, pr.slab_fsc);
        int eid = static_cast<int>(edges_.size());
        edges_.push_back({a, b, S.configuration_at(tau, pr.alpha)});
        incident_[static_cast<size_t>(a)].push_back(eid);
        incident_[static_cast<size_t>(b)].push_back(eid);
        unite(a, b);
    }
}

std::vector<Configuration> Path::waypoints() const {
    std::vector<Configuration> out;
    for (const PathLeg& leg : legs)
        for (const Configuration& c : leg.waypoints) {
            if (!out.empty() && out.back().position == c.position &&
                out.back().rotation == c.rotation)
                continue;
            out.push_back(c);
        }
    return out;
}

}  // namespace mms
