#include "mms/geom/pslg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace mms {

std::optional<Segment> clip_segment(const Segment& s, const Box& box) {
    Point d = s.b - s.a;
    Rational t0(0), t1(1);
    auto clip = [&](const Rational& den, const Rational& num) -> bool {
        // keep t with den * t <= num
        if (den.is_zero()) return num.sign() >= 0;
        Rational t = num / den;
        if (den.sign() > 0) {
            if (t < t1) t1 = t;
        } else {
            if (t > t0) t0 = t;
        }
        return true;
    };
    if (!clip(-d.x, s.a.x - box.xlo)) return std::nullopt;
    if (!clip(d.x, box.xhi - s.a.x)) return std::nullopt;
    if (!clip(-d.y, s.a.y - box.ylo)) return std::nullopt;
    if (!clip(d.y, box.yhi - s.a.y)) return std::nullopt;
    if (t0 >= t1) return std::nullopt;
    return Segment{s.a + t0 * d, s.a + t1 * d};
}

namespace {

// Interval bound on an event line; nullopt stands for the unbounded side.
using Lower = std::optional<Rational>;  // nullopt: -infinity
using Upper = std::optional<Rational>;  // nullopt: +infinity

struct EventSide {
    std::vector<Rational> ys;  // region boundaries, ascending (ties allowed)
    std::vector<int> region;   // ys.size() + 1 global region ids
};

}  // namespace

Pslg::Pslg(const std::vector<Segment>& segments, Box box) : box_(std::move(box)) {
    if (box_.xlo >= box_.xhi || box_.ylo >= box_.yhi)
        throw std::invalid_argument("Pslg: empty box");

    std::vector<Segment> segs;
    auto add = [&segs](Segment s) {
        if (s.is_degenerate()) return;
        if (s.b < s.a) std::swap(s.a, s.b);
        segs.push_back(std::move(s));
    };
    for (const Segment& s : segments)
        if (auto c = clip_segment(s, box_)) add(*c);
    Point bl{box_.xlo, box_.ylo}, br{box_.xhi, box_.ylo};
    Point tr{box_.xhi, box_.yhi}, tl{box_.xlo, box_.yhi};
    add({bl, br});
    add({br, tr});
    add({tr, tl});
    add({tl, bl});

    // Split every segment at every intersection with another one.
    size_t n = segs.size();
    std::vector<std::vector<Rational>> params(n);
    for (auto& ps : params) {
        ps.emplace_back(0);
        ps.emplace_back(1);
    }
    for (size_t i = 0; i < n; ++i) {
        Point di = segs[i].b - segs[i].a;
        for (size_t j = i + 1; j < n; ++j) {
            Point dj = segs[j].b - segs[j].a;
            Rational den = cross(di, dj);
            if (den.is_zero()) {
                if (orientation(segs[i].a, segs[i].b, segs[j].a) != 0) continue;
                Rational dd = dot(di, di), ddj = dot(dj, dj);
                for (const Point* p : {&segs[j].a, &segs[j].b}) {
                    Rational t = dot(*p - segs[i].a, di) / dd;
                    if (t.sign() > 0 && t < Rational(1)) params[i].push_back(std::move(t));
                }
                for (const Point* p : {&segs[i].a, &segs[i].b}) {
                    Rational t = dot(*p - segs[j].a, dj) / ddj;
                    if (t.sign() > 0 && t < Rational(1)) params[j].push_back(std::move(t));
                }
            } else {
                Rational t = cross(segs[j].a - segs[i].a, dj) / den;
                Rational u = cross(segs[j].a - segs[i].a, di) / den;
                if (t.sign() < 0 || t > Rational(1) || u.sign() < 0 || u > Rational(1)) continue;
                if (t.sign() > 0 && t < Rational(1)) params[i].push_back(std::move(t));
                if (u.sign() > 0 && u < Rational(1)) params[j].push_back(std::move(u));
            }
        }
    }
    std::map<std::pair<Point, Point>, bool> seen;
    for (size_t i = 0; i < n; ++i) {
        auto& ps = params[i];
        std::sort(ps.begin(), ps.end());
        ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
        Point a = segs[i].a, d = segs[i].b - segs[i].a;
        for (size_t k = 0; k + 1 < ps.size(); ++k) {
            Point p = a + ps[k] * d, q = a + ps[k + 1] * d;
            if (q < p) std::swap(p, q);
            if (!seen.emplace(std::make_pair(p, q), true).second) continue;
            if (p.x == q.x)
                vertical_atoms_.push_back({p, q});
            else
                atoms_.push_back({p, q});
        }
    }

    for (const Segment& s : atoms_) {
        events_.push_back(s.a.x);
        events_.push_back(s.b.x);
    }
    for (const Segment& s : vertical_atoms_) events_.push_back(s.a.x);
    std::sort(events_.begin(), events_.end());
    events_.erase(std::unique(events_.begin(), events_.end()), events_.end());
    int m = static_cast<int>(events_.size());
    int nslabs = m - 1;

    vertical_cover_.assign(static_cast<size_t>(m), {});
    for (const Segment& s : vertical_atoms_)
        vertical_cover_[static_cast<size_t>(event_index(s.a.x))].push_back({s.a.y, s.b.y});
    for (auto& cov : vertical_cover_) {
        std::sort(cov.begin(), cov.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<Rational, Rational>> merged;
        for (auto& iv : cov) {
            if (!merged.empty() && iv.first <= merged.back().second)
                merged.back().second = std::max(merged.back().second, iv.second);
            else
                merged.push_back(std::move(iv));
        }
        cov = std::move(merged);
    }

    slab_actives_.assign(static_cast<size_t>(nslabs), {});
    for (int ai = 0; ai < static_cast<int>(atoms_.size()); ++ai) {
        int e0 = event_index(atoms_[static_cast<size_t>(ai)].a.x);
        int e1 = event_index(atoms_[static_cast<size_t>(ai)].b.x);
        for (int s = e0; s < e1; ++s) slab_actives_[static_cast<size_t>(s)].push_back(ai);
    }
    for (int s = 0; s < nslabs; ++s) {
        Rational mid = midpoint(events_[static_cast<size_t>(s)], events_[static_cast<size_t>(s) + 1]);
        auto& act = slab_actives_[static_cast<size_t>(s)];
        std::vector<std::pair<Rational, int>> keyed;
        keyed.reserve(act.size());
        for (int id : act) keyed.push_back({atoms_[static_cast<size_t>(id)].y_at(mid), id});
        std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        });
        for (size_t k = 0; k < act.size(); ++k) act[k] = keyed[k].second;
    }

    // Region ids: per-slab gaps plus the two sentinel half-planes beyond the
    // first and last event line.
    std::vector<int> offset(static_cast<size_t>(nslabs) + 1, 0);
    for (int s = 0; s < nslabs; ++s)
        offset[static_cast<size_t>(s) + 1] =
            offset[static_cast<size_t>(s)] + static_cast<int>(slab_actives_[static_cast<size_t>(s)].size()) + 1;
    int left_sent = offset[static_cast<size_t>(nslabs)];
    int right_sent = left_sent + 1;
    std::vector<int> uf(static_cast<size_t>(right_sent) + 1);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&uf](int x) {
        while (uf[static_cast<size_t>(x)] != x) {
            uf[static_cast<size_t>(x)] = uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
            x = uf[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) uf[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    };

    auto make_side = [&](int slab, int sentinel) {
        EventSide side;
        if (slab < 0 || slab >= nslabs) {
            side.region = {sentinel};
            return side;
        }
        side.region.reserve(slab_actives_[static_cast<size_t>(slab)].size() + 1);
        for (size_t g = 0; g <= slab_actives_[static_cast<size_t>(slab)].size(); ++g)
            side.region.push_back(offset[static_cast<size_t>(slab)] + static_cast<int>(g));
        return side;
    };

    for (int e = 0; e < m; ++e) {
        const Rational& x = events_[static_cast<size_t>(e)];
        EventSide left = make_side(e - 1, left_sent);
        EventSide right = make_side(e, right_sent);
        for (EventSide* side : {&left, &right}) {
            if (side->region.size() == 1 && side->ys.empty() &&
                (side->region[0] == left_sent || side->region[0] == right_sent))
                continue;
            int slab = (side == &left) ? e - 1 : e;
            for (int id : slab_actives_[static_cast<size_t>(slab)])
                side->ys.push_back(atoms_[static_cast<size_t>(id)].y_at(x));
        }
        const auto& cover = vertical_cover_[static_cast<size_t>(e)];
        auto blocked = [&](const Lower& l, const Upper& h) {
            if (!l || !h) return false;
            // merged disjoint cover: a single interval must contain (l, h)
            auto it = std::upper_bound(cover.begin(), cover.end(), *l,
                                       [](const Rational& v, const auto& iv) { return v < iv.first; });
            if (it == cover.begin()) return false;
            --it;
            return it->first <= *l && *h <= it->second;
        };
        auto lower_of = [](const EventSide& s, size_t g) -> Lower {
            if (g == 0) return std::nullopt;
            return s.ys[g - 1];
        };
        auto upper_of = [](const EventSide& s, size_t g) -> Upper {
            if (g == s.ys.size()) return std::nullopt;
            return s.ys[g];
        };
        size_t gl = 0, gr = 0;
        while (gl < left.region.size() && gr < right.region.size()) {
            Lower l1 = lower_of(left, gl), l2 = lower_of(right, gr);
            Upper h1 = upper_of(left, gl), h2 = upper_of(right, gr);
            Lower l = (!l1) ? l2 : (!l2 ? l1 : Lower(std::max(*l1, *l2)));
            Upper h = (!h1) ? h2 : (!h2 ? h1 : Upper(std::min(*h1, *h2)));
            bool nonempty = !l || !h || *l < *h;
            if (nonempty && !blocked(l, h)) unite(left.region[gl], right.region[gr]);
            bool adv_l, adv_r;
            if (!h1 && !h2) {
                adv_l = adv_r = true;
            } else if (!h1) {
                adv_r = true;
                adv_l = false;
            } else if (!h2) {
                adv_l = true;
                adv_r = false;
            } else {
                adv_l = *h1 <= *h2;
                adv_r = *h2 <= *h1;
            }
            if (adv_l) ++gl;
            if (adv_r) ++gr;
        }
    }

    std::vector<int> face_of(static_cast<size_t>(right_sent) + 1, -1);
    auto face_id = [&](int region) {
        int r = find(region);
        if (face_of[static_cast<size_t>(r)] < 0) face_of[static_cast<size_t>(r)] = face_count_++;
        return face_of[static_cast<size_t>(r)];
    };
    if (face_id(left_sent) != kOuterFace) throw std::logic_error("Pslg: outer face id");
    slab_gap_face_.assign(static_cast<size_t>(nslabs), {});
    for (int s = 0; s < nslabs; ++s) {
        auto& faces = slab_gap_face_[static_cast<size_t>(s)];
        for (size_t g = 0; g <= slab_actives_[static_cast<size_t>(s)].size(); ++g)
            faces.push_back(face_id(offset[static_cast<size_t>(s)] + static_cast<int>(g)));
    }
    if (face_id(right_sent) != kOuterFace)
        throw std::logic_error("Pslg: sentinels not glued into one outer face");

    face_area_.assign(static_cast<size_t>(face_count_), Rational(0));
    face_sample_.assign(static_cast<size_t>(face_count_), Point{});
    face_sample_[kOuterFace] = Point{box_.xlo - Rational(1), box_.ylo - Rational(1)};
    std::vector<Rational> best(static_cast<size_t>(face_count_), Rational(-1));
    for (int s = 0; s < nslabs; ++s) {
        const auto& act = slab_actives_[static_cast<size_t>(s)];
        const Rational& xl = events_[static_cast<size_t>(s)];
        const Rational& xr = events_[static_cast<size_t>(s) + 1];
        Rational mid = midpoint(xl, xr);
        for (size_t g = 1; g < act.size(); ++g) {
            int bot = act[g - 1], top = act[g];
            int face = slab_gap_face_[static_cast<size_t>(s)][g];
            Rational yb = atoms_[static_cast<size_t>(bot)].y_at(mid);
            Rational yt = atoms_[static_cast<size_t>(top)].y_at(mid);
            Rational area = (xr - xl) * (yt - yb);  // midpoint rule, exact for lines
            face_area_[static_cast<size_t>(face)] += area;
            traps_.push_back({xl, xr, bot, top, face});
            if (area > best[static_cast<size_t>(face)]) {
                best[static_cast<size_t>(face)] = area;
                face_sample_[static_cast<size_t>(face)] = Point{mid, midpoint(yb, yt)};
            }
        }
    }
}

int Pslg::event_index(const Rational& x) const {
    auto it = std::lower_bound(events_.begin(), events_.end(), x);
    if (it == events_.end() || *it != x) return -1;
    return static_cast<int>(it - events_.begin());
}

int Pslg::slab_of(const Rational& x) const {
    auto it = std::upper_bound(events_.begin(), events_.end(), x);
    int idx = static_cast<int>(it - events_.begin());
    if (idx == 0 || idx >= static_cast<int>(events_.size())) return -1;
    if (events_[static_cast<size_t>(idx) - 1] == x) return -1;
    return idx - 1;
}

int Pslg::gap_at(int slab, const Rational& x, const Rational& y, bool& on_edge) const {
    const auto& act = slab_actives_[static_cast<size_t>(slab)];
    on_edge = false;
    int l = 0, r = static_cast<int>(act.size());
    while (l < r) {
        int mid = (l + r) / 2;
        Rational ya = atoms_[static_cast<size_t>(act[static_cast<size_t>(mid)])].y_at(x);
        if (ya == y) {
            on_edge = true;
            return mid;
        }
        if (ya < y)
            l = mid + 1;
        else
            r = mid;
    }
    return l;
}

int Pslg::locate(const Point& p) const {
    if (p.x < box_.xlo || p.x > box_.xhi || p.y < box_.ylo || p.y > box_.yhi) return kOuterFace;
    int nslabs = static_cast<int>(events_.size()) - 1;
    int e = event_index(p.x);
    if (e < 0) {
        int s = slab_of(p.x);
        if (s < 0) return kOuterFace;
        bool on_edge;
        int g = gap_at(s, p.x, p.y, on_edge);
        if (on_edge) return -1;
        return slab_gap_face_[static_cast<size_t>(s)][static_cast<size_t>(g)];
    }
    const auto& cover = vertical_cover_[static_cast<size_t>(e)];
    auto it = std::upper_bound(cover.begin(), cover.end(), p.y,
                               [](const Rational& v, const auto& iv) { return v < iv.first; });
    if (it != cover.begin()) {
        --it;
        if (it->first <= p.y && p.y <= it->second) return -1;
    }
    for (int side : {e - 1, e}) {
        if (side < 0 || side >= nslabs) continue;
        bool on_edge;
        int g = gap_at(side, p.x, p.y, on_edge);
        if (on_edge) return -1;
        (void)g;
    }
    for (int side : {e - 1, e}) {
        if (side < 0 || side >= nslabs) continue;
        bool on_edge;
        int g = gap_at(side, p.x, p.y, on_edge);
        return slab_gap_face_[static_cast<size_t>(side)][static_cast<size_t>(g)];
    }
    return kOuterFace;
}

std::vector<int> Pslg::faces_touching(const Point& p) const {
    std::vector<int> out;
    auto push = [&out](int f) {
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    };
    int f = locate(p);
    if (f != -1) {
        out.push_back(f);
        return out;
    }
    int nslabs = static_cast<int>(events_.size()) - 1;
    int e = event_index(p.x);
    if (e < 0) {
        int s = slab_of(p.x);
        bool on_edge;
        int a = gap_at(s, p.x, p.y, on_edge);  // atom index when on_edge
        push(slab_gap_face_[static_cast<size_t>(s)][static_cast<size_t>(a)]);
        push(slab_gap_face_[static_cast<size_t>(s)][static_cast<size_t>(a) + 1]);
        return out;
    }
    for (int side : {e - 1, e}) {
        if (side < 0 || side >= nslabs) {
            push(kOuterFace);
            continue;
        }
        const auto& act = slab_actives_[static_cast<size_t>(side)];
        const auto& faces = slab_gap_face_[static_cast<size_t>(side)];
        int below = 0, coincident = 0;
        for (int id : act) {
            Rational ya = atoms_[static_cast<size_t>(id)].y_at(p.x);
            if (ya < p.y) ++below;
            if (ya == p.y) ++coincident;
        }
        if (coincident == 0) {
            push(faces[static_cast<size_t>(below)]);
        } else {
            for (int g = below; g <= below + coincident; ++g)
                push(faces[static_cast<size_t>(g)]);
        }
    }
    return out;
}

bool Pslg::segment_in_face(int f, const Point& a, const Point& b) const {
    if (locate(a) != f || locate(b) != f) return false;
    if (a == b) return true;
    Point d = b - a;
    auto cuts = cut_parameters({a, b});
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (i > 0 && locate(a + cuts[i] * d) != f) return false;  // interior knot
        Point mid = a + midpoint(cuts[i], cuts[i + 1]) * d;
        if (locate(mid) != f) return false;
    }
    return true;
}

bool Pslg::segment_in_closed_face(int f, const Point& a, const Point& b) const {
    auto touches = [&](const Point& p) {
        auto fs = faces_touching(p);
        return std::find(fs.begin(), fs.end(), f) != fs.end();
    };
    if (!touches(a) || !touches(b)) return false;
    if (a == b) return true;
    Point d = b - a;
    auto cuts = cut_parameters({a, b});
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (i > 0 && !touches(a + cuts[i] * d)) return false;  // interior knot
        if (!touches(a + midpoint(cuts[i], cuts[i + 1]) * d)) return false;
    }
    return true;
}

std::vector<Point> Pslg::visibility_shortest_path(int f, const Point& a, const Point& b) const {
    auto touches = [&](const Point& p) {
        auto fs = faces_touching(p);
        return std::find(fs.begin(), fs.end(), f) != fs.end();
    };
    if (f <= 0 || !touches(a) || !touches(b))
        throw std::runtime_error("visibility_shortest_path: disconnected");
    if (segment_in_closed_face(f, a, b)) return {a, b};

    // Nodes: the endpoints plus every arrangement vertex on the closure of f.
    std::vector<Point> nodes{a, b};
    {
        std::set<Point> seen{a, b};
        auto add = [&](const Point& p) {
            if (touches(p) && seen.insert(p).second) nodes.push_back(p);
        };
        for (const Segment& s : atoms_) {
            add(s.a);
            add(s.b);
        }
        for (const Segment& s : vertical_atoms_) {
            add(s.a);
            add(s.b);
        }
    }
    size_t n = nodes.size();
    std::vector<std::vector<std::pair<size_t, double>>> adj(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (segment_in_closed_face(f, nodes[i], nodes[j])) {
                double w = std::sqrt((nodes[j] - nodes[i]).norm_sq().to_double());
                adj[i].push_back({j, w});
                adj[j].push_back({i, w});
            }

    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<size_t> prev(n, n);
    std::priority_queue<std::pair<double, size_t>, std::vector<std::pair<double, size_t>>,
                        std::greater<>>
        pq;
    dist[0] = 0;
    pq.push({0.0, 0});
    while (!pq.empty()) {
        auto [d0, u] = pq.top();
        pq.pop();
        if (d0 > dist[u]) continue;
        if (u == 1) break;
        for (auto [v, w] : adj[u])
            if (dist[u] + w < dist[v]) {
                dist[v] = dist[u] + w;
                prev[v] = u;
                pq.push({dist[v], v});
            }
    }
    if (prev[1] == n) throw std::logic_error("visibility_shortest_path: face graph disconnected");
    std::vector<Point> path;
    for (size_t v = 1; v != 0; v = prev[v]) path.push_back(nodes[v]);
    path.push_back(a);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<Point> visibility_shortest_path(const Pslg& g, const Point& a, const Point& b) {
    auto fa = g.faces_touching(a);
    auto fb = g.faces_touching(b);
    for (int f : fa)
        if (f != Pslg::kOuterFace && std::find(fb.begin(), fb.end(), f) != fb.end())
            return g.visibility_shortest_path(f, a, b);
    throw std::runtime_error("visibility_shortest_path: disconnected");
}

std::vector<Rational> Pslg::cut_parameters(const Segment& s) const {
    std::vector<Rational> ps{Rational(0), Rational(1)};
    Point d = s.b - s.a;
    if (s.is_degenerate()) return ps;
    auto handle = [&](const Segment& g) {
        Point e = g.b - g.a;
        Rational den = cross(d, e);
        if (den.is_zero()) {
            if (orientation(s.a, s.b, g.a) != 0) return;
            Rational dd = dot(d, d);
            for (const Point* p : {&g.a, &g.b}) {
                Rational t = dot(*p - s.a, d) / dd;
                if (t.sign() >= 0 && t <= Rational(1)) ps.push_back(std::move(t));
            }
        } else {
            Rational t = cross(g.a - s.a, e) / den;
            Rational u = cross(g.a - s.a, d) / den;
            if (t.sign() >= 0 && t <= Rational(1) && u.sign() >= 0 && u <= Rational(1))
                ps.push_back(std::move(t));
        }
    };
    for (const Segment& g : atoms_) handle(g);
    for (const Segment& g : vertical_atoms_) handle(g);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

}  // namespace mms
