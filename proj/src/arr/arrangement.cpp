#include "mms/arr/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "mms/curves/topology.hpp"
#include "mms/numeric/root_isolation.hpp"

namespace mms {

namespace {

int to_int(std::strong_ordering o) {
    if (o == std::strong_ordering::less) return -1;
    return o == std::strong_ordering::greater ? 1 : 0;
}

// Refining three-way compare; narrows both arguments in place.
int cmp(AlgebraicReal& a, AlgebraicReal& b) { return to_int(compare(a, b)); }

bool alg_less(const AlgebraicReal& a, const AlgebraicReal& b) {
    return (a <=> b) == std::strong_ordering::less;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        auto& p = parent;
        while (p[static_cast<size_t>(v)] != v) {
            p[static_cast<size_t>(v)] = p[static_cast<size_t>(p[static_cast<size_t>(v)])];
            v = p[static_cast<size_t>(v)];
        }
        return v;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

// Bound ids used through the construction: nonnegative = piece index,
// kBottom/kTop = the horizontal box edges.
static constexpr int kBottom = -1;
static constexpr int kTop = -2;

Arrangement::Arrangement(const std::vector<XMonotoneArc>& arcs, Box box)
    : Arrangement(arcs, {}, std::move(box)) {}

Arrangement::Arrangement(const std::vector<XMonotoneArc>& arcs, std::vector<AlgebraicReal> walls,
                         Box box)
    : box_(std::move(box)) {
    if (!(box_.xlo < box_.xhi && box_.ylo < box_.yhi))
        throw std::invalid_argument("arrangement: degenerate box");

    std::vector<AlgebraicReal> cuts;
    for (AlgebraicReal& w : walls) {
        if (w.compare_to(box_.xlo) != std::strong_ordering::greater) continue;
        if (w.compare_to(box_.xhi) != std::strong_ordering::less) continue;
        cuts.push_back(std::move(w));
    }

    // Merge arcs of the same curve whose x-spans overlap (never across a
    // pole), clipping spans to the box x-range as we go.
    std::map<RationalFunction, std::vector<std::pair<AlgebraicReal, AlgebraicReal>>> spans;
    for (const XMonotoneArc& arc : arcs) {
        if (level_poly(arc.curve, box_.ylo).is_zero() || level_poly(arc.curve, box_.yhi).is_zero())
            continue;  // the curve is one of the horizontal rim lines
        AlgebraicReal left = arc.left ? *arc.left : AlgebraicReal(box_.xlo);
        AlgebraicReal right = arc.right ? *arc.right : AlgebraicReal(box_.xhi);
        if (left.compare_to(box_.xlo) == std::strong_ordering::less) left = AlgebraicReal(box_.xlo);
        if (right.compare_to(box_.xhi) == std::strong_ordering::greater)
            right = AlgebraicReal(box_.xhi);
        if (cmp(left, right) >= 0) continue;
        spans[arc.curve].push_back({std::move(left), std::move(right)});
    }

    for (auto& [curve, list] : spans) {
        std::sort(list.begin(), list.end(),
                  [](const auto& a, const auto& b) { return alg_less(a.first, b.first); });
        std::vector<std::pair<AlgebraicReal, AlgebraicReal>> merged;
        for (auto& span : list) {
            if (!merged.empty()) {
                int c = cmp(merged.back().second, span.first);
                bool pole_touch = c == 0 && sign_at(curve.den(), merged.back().second) == 0;
                if (c > 0 || (c == 0 && !pole_touch)) {
                    if (cmp(merged.back().second, span.second) < 0)
                        merged.back().second = span.second;
                    continue;
                }
            }
            merged.push_back(span);
        }

        // Cut each span where the curve crosses the bottom/top box edges and
        // keep the sub-spans that run inside the box.
        for (auto& [left, right] : merged) {
            std::vector<std::pair<AlgebraicReal, Piece::Stop>> knots;
            knots.push_back({left, Piece::Stop::Arc});
            for (int side = 0; side < 2; ++side) {
                const Rational& bound = side == 0 ? box_.ylo : box_.yhi;
                Piece::Stop stop = side == 0 ? Piece::Stop::Bottom : Piece::Stop::Top;
                for (auto& r : isolate_real_roots(level_poly(curve, bound)))
                    if (cmp(left, r.root) < 0 && cmp(r.root, right) < 0)
                        knots.push_back({r.root, stop});
            }
            knots.push_back({right, Piece::Stop::Arc});
            std::sort(knots.begin() + 1, knots.end() - 1,
                      [](const auto& a, const auto& b) { return alg_less(a.first, b.first); });

            auto end_stop = [&](AlgebraicReal& x) {
                if (x.is_rational()) {
                    Rational v = curve.evaluate(x.rational_value());
                    if (v == box_.ylo) return Piece::Stop::Bottom;
                    if (v == box_.yhi) return Piece::Stop::Top;
                    if (x.rational_value() == box_.xlo || x.rational_value() == box_.xhi)
                        return Piece::Stop::BoxSide;
                    return Piece::Stop::Arc;
                }
                if (sign_at(level_poly(curve, box_.ylo), x) == 0) return Piece::Stop::Bottom;
                if (sign_at(level_poly(curve, box_.yhi), x) == 0) return Piece::Stop::Top;
                return Piece::Stop::Arc;
            };

            for (size_t i = 0; i + 1 < knots.size(); ++i) {
                Rational t = rational_between(knots[i].first, knots[i + 1].first);
                Rational v = curve.evaluate(t);
                if (!(box_.ylo < v && v < box_.yhi)) continue;
                Piece p;
                p.f = curve;
                p.left = knots[i].first;
                p.right = knots[i + 1].first;
                p.left_stop = i == 0 ? end_stop(p.left) : knots[i].second;
                p.right_stop = i + 2 == knots.size() ? end_stop(p.right) : knots[i + 1].second;
                pieces_.push_back(std::move(p));
            }
        }
    }

    // Events: box sides, piece endpoints, and pairwise intersections within
    // the closed overlap of two pieces' spans (tagged with the pair so the
    // sweep can compare values at the event combinatorially).
    struct TagX {
        AlgebraicReal x;
        int a, b;
    };
    std::vector<TagX> tags;
    for (size_t i = 0; i < pieces_.size(); ++i) {
        for (size_t j = i + 1; j < pieces_.size(); ++j) {
            Piece& p = pieces_[i];
            Piece& q = pieces_[j];
            if (p.f == q.f) continue;
            AlgebraicReal lo = cmp(p.left, q.left) >= 0 ? p.left : q.left;
            AlgebraicReal hi = cmp(p.right, q.right) <= 0 ? p.right : q.right;
            if (cmp(lo, hi) > 0) continue;
            for (const PairBreakpoint& bp : pair_topology(p.f, q.f).breakpoints) {
                if (bp.intersection_multiplicity == 0) continue;
                AlgebraicReal x = bp.x;
                if (cmp(x, lo) < 0 || cmp(x, hi) > 0) continue;
                tags.push_back({std::move(x), static_cast<int>(i), static_cast<int>(j)});
            }
        }
    }

    events_.push_back(AlgebraicReal(box_.xlo));
    events_.push_back(AlgebraicReal(box_.xhi));
    for (Piece& p : pieces_) {
        events_.push_back(p.left);
        events_.push_back(p.right);
    }
    for (TagX& t : tags) events_.push_back(t.x);
    for (const AlgebraicReal& w : cuts) events_.push_back(w);
    std::sort(events_.begin(), events_.end(), alg_less);
    events_.erase(std::unique(events_.begin(), events_.end(),
                              [](const AlgebraicReal& a, const AlgebraicReal& b) { return a == b; }),
                  events_.end());

    auto event_index = [&](const AlgebraicReal& x) {
        auto it = std::lower_bound(events_.begin(), events_.end(), x, alg_less);
        return static_cast<int>(it - events_.begin());
    };
    event_wall_.assign(events_.size(), 0);
    for (const AlgebraicReal& w : cuts) event_wall_[static_cast<size_t>(event_index(w))] = 1;
    for (Piece& p : pieces_) {
        p.left_event = event_index(p.left);
        p.right_event = event_index(p.right);
    }
    event_tags_.assign(events_.size(), {});
    for (TagX& t : tags) {
        auto& list = event_tags_[static_cast<size_t>(event_index(t.x))];
        list.push_back({t.a, t.b});
    }
    for (auto& list : event_tags_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }

    // Slabs: fixed vertical order of the active pieces, sorted at a rational
    // sample point.  Order ties are impossible off events.
    int nslabs = static_cast<int>(events_.size()) - 1;
    for (int s = 0; s < nslabs; ++s)
        slab_sample_.push_back(
            rational_between(events_[static_cast<size_t>(s)], events_[static_cast<size_t>(s) + 1]));
    slab_actives_.assign(static_cast<size_t>(nslabs), {});
    slab_pos_.assign(static_cast<size_t>(nslabs), std::vector<int>(pieces_.size(), -1));
    for (size_t pi = 0; pi < pieces_.size(); ++pi)
        for (int s = pieces_[pi].left_event; s < pieces_[pi].right_event; ++s)
            slab_actives_[static_cast<size_t>(s)].push_back(static_cast<int>(pi));
    for (int s = 0; s < nslabs; ++s) {
        auto& act = slab_actives_[static_cast<size_t>(s)];
        std::vector<std::pair<Rational, int>> vals;
        for (int pi : act)
            vals.push_back({pieces_[static_cast<size_t>(pi)].f.evaluate(slab_sample(s)), pi});
        std::sort(vals.begin(), vals.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (size_t k = 0; k + 1 < vals.size(); ++k)
            if (vals[k].first == vals[k + 1].first)
                throw std::logic_error("arrangement: order tie inside a slab");
        for (size_t k = 0; k < vals.size(); ++k) {
            act[k] = vals[k].second;
            slab_pos_[static_cast<size_t>(s)][static_cast<size_t>(vals[k].second)] =
                static_cast<int>(k);
        }
    }

    // Cells and gluing: two cells in neighboring slabs belong to the same
    // face exactly when their open y-intervals on the event line overlap.
    cell_offset_.assign(static_cast<size_t>(nslabs) + 1, 0);
    for (int s = 0; s < nslabs; ++s)
        cell_offset_[static_cast<size_t>(s) + 1] =
            cell_offset_[static_cast<size_t>(s)] +
            static_cast<int>(slab_actives_[static_cast<size_t>(s)].size()) + 1;
    int total_cells = cell_offset_[static_cast<size_t>(nslabs)];
    Dsu cells(static_cast<size_t>(total_cells));
    glued_.assign(events_.size(), {});
    for (int e = 1; e < nslabs; ++e) {
        if (event_wall_[static_cast<size_t>(e)]) continue;  // nothing joins across a wall
        int sl = e - 1, sr = e;
        const auto& al = slab_actives_[static_cast<size_t>(sl)];
        const auto& ar = slab_actives_[static_cast<size_t>(sr)];
        int nl = static_cast<int>(al.size()) + 1, nr = static_cast<int>(ar.size()) + 1;
        auto lo_id = [](const std::vector<int>& a, int c) {
            return c == 0 ? kBottom : a[static_cast<size_t>(c) - 1];
        };
        auto hi_id = [](const std::vector<int>& a, int c) {
            return c == static_cast<int>(a.size()) ? kTop : a[static_cast<size_t>(c)];
        };
        int i = 0, j = 0;
        while (i < nl && j < nr) {
            // Open-interval overlap; a cell pinched to a point at the event
            // (consecutive bounds meeting there) joins nothing.
            bool overlap = compare_at_event(lo_id(al, i), hi_id(al, i), e) < 0 &&
                           compare_at_event(lo_id(ar, j), hi_id(ar, j), e) < 0 &&
                           compare_at_event(lo_id(al, i), hi_id(ar, j), e) < 0 &&
                           compare_at_event(lo_id(ar, j), hi_id(al, i), e) < 0;
            if (overlap) {
                int gl = cell_offset_[static_cast<size_t>(sl)] + i;
                int gr = cell_offset_[static_cast<size_t>(sr)] + j;
                cells.unite(gl, gr);
                glued_[static_cast<size_t>(e)].push_back({gl, gr});
            }
            int hc = compare_at_event(hi_id(al, i), hi_id(ar, j), e);
            if (hc <= 0) ++i;
            if (hc >= 0) ++j;
        }
    }

    // Interior faces numbered in slab order, bottom to top; 0 is outside.
    cell_face_.assign(static_cast<size_t>(total_cells), 0);
    std::vector<int> root_face(static_cast<size_t>(total_cells), -1);
    face_count_ = 1;
    for (int g = 0; g < total_cells; ++g) {
        int r = cells.find(g);
        if (root_face[static_cast<size_t>(r)] < 0) root_face[static_cast<size_t>(r)] = face_count_++;
        cell_face_[static_cast<size_t>(g)] = root_face[static_cast<size_t>(r)];
    }

    build_vertices_and_edges();
}

// Value order at the event line of two bounds (pieces or box edges).  Fast
// paths: endpoint stop reasons give rim contacts, intersection tags give
// equalities, and shared-slab positions give strict orders (the sign of a
// difference of bound values cannot change between a slab sample and an
// adjacent event except at a tagged intersection).  Anything else falls back
// to exact algebraic signs.
int Arrangement::compare_at_event(int a, int b, int e) const {
    if (a == b) return 0;
    if (a == kBottom || a == kTop) {
        if (b == kBottom) return 1;
        if (b == kTop) return -1;
        return -piece_vs_bound(b, a == kBottom, e);
    }
    if (b == kBottom || b == kTop) return piece_vs_bound(a, b == kBottom, e);

    const Piece& p = pieces_[static_cast<size_t>(a)];
    const Piece& q = pieces_[static_cast<size_t>(b)];
    if (p.f == q.f) return 0;
    if (tagged(e, a, b)) return 0;
    for (int s : {e - 1, e}) {
        int pa = slab_pos_[static_cast<size_t>(s)][static_cast<size_t>(a)];
        int pb = slab_pos_[static_cast<size_t>(s)][static_cast<size_t>(b)];
        if (pa >= 0 && pb >= 0) return pa < pb ? -1 : 1;
    }
    AlgebraicReal x1 = events_[static_cast<size_t>(e)], x2 = x1, x3 = x1;
    return sign_at(difference_numerator(p.f, q.f), x1) * sign_at(p.f.den(), x2) *
           sign_at(q.f.den(), x3);
}

int Arrangement::piece_vs_bound(int pi, bool bottom, int e) const {
    const Piece& p = pieces_[static_cast<size_t>(pi)];
    Piece::Stop cross = bottom ? Piece::Stop::Bottom : Piece::Stop::Top;
    if ((p.left_event == e && p.left_stop == cross) || (p.right_event == e && p.right_stop == cross))
        return 0;
    int s = p.right_event == e ? e - 1 : e;
    Rational v = p.f.evaluate(slab_sample(s));
    return (v - (bottom ? box_.ylo : box_.yhi)).sign();
}

bool Arrangement::tagged(int e, int a, int b) const {
    std::pair<int, int> key{std::min(a, b), std::max(a, b)};
    const auto& list = event_tags_[static_cast<size_t>(e)];
    return std::binary_search(list.begin(), list.end(), key);
}

// Vertices event by event (bottom to top within an event), splitting piece
// edges wherever a vertex lies on them; edge totals fall out of the same
// walk.  Two distinct incident pieces share a value at an event only if
// their pair is tagged there or they are the same curve, so value classes
// are a pure union-find.
void Arrangement::build_vertices_and_edges() {
    size_t nev = events_.size();
    int last = static_cast<int>(nev) - 1;
    std::vector<std::vector<int>> ev_start(nev), ev_end(nev);
    for (size_t pi = 0; pi < pieces_.size(); ++pi) {
        ev_start[static_cast<size_t>(pieces_[pi].left_event)].push_back(static_cast<int>(pi));
        ev_end[static_cast<size_t>(pieces_[pi].right_event)].push_back(static_cast<int>(pi));
    }

    std::vector<int> splits(pieces_.size(), 0);
    int bottom_rim = 0, top_rim = 0, first_rim = 0, last_rim = 0, wall_edges = 0;
    vertex_event_begin_.assign(nev + 1, 0);
    Dsu comp(pieces_.size() + 1);  // pieces plus the box rim
    int rim = static_cast<int>(pieces_.size());

    for (int e = 0; e <= last; ++e) {
        vertex_event_begin_[static_cast<size_t>(e)] = static_cast<int>(vertices_.size());
        if (e == 0 || e == last) {
            // Rim event: x is a box side, every incident value is rational.
            const Rational x = events_[static_cast<size_t>(e)].rational_value();
            std::map<Rational, int> classes;
            classes[box_.ylo];
            classes[box_.yhi];
            for (const auto& list : {ev_start[static_cast<size_t>(e)], ev_end[static_cast<size_t>(e)]})
                for (int pi : list) {
                    classes[pieces_[static_cast<size_t>(pi)].f.evaluate(x)];
                    comp.unite(pi, rim);
                }
            for (const auto& [v, unused] : classes) {
                vertices_.push_back({AlgebraicReal(x), true, v, RationalFunction()});
                if (v == box_.ylo) ++bottom_rim;
                if (v == box_.yhi) ++top_rim;
            }
            (e == 0 ? first_rim : last_rim) = static_cast<int>(classes.size());
            continue;
        }

        bool wall = event_wall_[static_cast<size_t>(e)] != 0;
        std::map<int, int> idx;  // piece -> union-find element
        auto add = [&](int pi) {
            if (!idx.count(pi)) idx[pi] = static_cast<int>(idx.size());
        };
        for (int pi : ev_start[static_cast<size_t>(e)]) add(pi);
        for (int pi : ev_end[static_cast<size_t>(e)]) add(pi);
        for (const auto& [a, b] : event_tags_[static_cast<size_t>(e)]) {
            add(a);
            add(b);
        }
        if (wall)  // a wall pins a vertex onto every piece crossing it
            for (size_t pi = 0; pi < pieces_.size(); ++pi)
                if (pieces_[pi].left_event <= e && e <= pieces_[pi].right_event)
                    add(static_cast<int>(pi));
        if (idx.empty() && !wall)
            throw std::logic_error("arrangement: interior event with no incident piece");
        int n = static_cast<int>(idx.size());
        Dsu dsu(static_cast<size_t>(n) + 2);  // elements + bottom + top
        int vb = n, vt = n + 1;
        std::map<RationalFunction, int> by_curve;
        for (const auto& [pi, id] : idx) {
            const Piece& p = pieces_[static_cast<size_t>(pi)];
            auto [it, fresh] = by_curve.insert({p.f, id});
            if (!fresh) dsu.unite(id, it->second);
            if (p.left_event == e) {
                if (p.left_stop == Piece::Stop::Bottom) dsu.unite(id, vb);
                if (p.left_stop == Piece::Stop::Top) dsu.unite(id, vt);
            }
            if (p.right_event == e) {
                if (p.right_stop == Piece::Stop::Bottom) dsu.unite(id, vb);
                if (p.right_stop == Piece::Stop::Top) dsu.unite(id, vt);
            }
        }
        for (const auto& [a, b] : event_tags_[static_cast<size_t>(e)]) dsu.unite(idx[a], idx[b]);

        struct Class {
            int rep;  // bound id: piece, kBottom, or kTop
            bool bottom = false, top = false;
        };
        std::map<int, Class> classes;  // by union-find root
        for (const auto& [pi, id] : idx) {
            int r = dsu.find(id);
            if (!classes.count(r)) classes[r] = {pi, false, false};
        }
        for (auto& [r, c] : classes) {
            if (dsu.find(vb) == r) {
                c.bottom = true;
                c.rep = kBottom;
            }
            if (dsu.find(vt) == r) {
                c.top = true;
                c.rep = kTop;
            }
        }
        if (wall) {  // the wall always reaches both rims
            bool have_bottom = false, have_top = false;
            for (const auto& [r, c] : classes) {
                have_bottom |= c.bottom;
                have_top |= c.top;
            }
            if (!have_bottom) classes[-1] = {kBottom, true, false};
            if (!have_top) classes[-2] = {kTop, false, true};
        }

        std::map<int, int> first_piece;  // class root -> one member piece
        for (const auto& [pi, id] : idx) {
            int r = dsu.find(id);
            auto [it, fresh] = first_piece.insert({r, pi});
            if (!fresh) comp.unite(pi, it->second);
        }
        for (const auto& [r, c] : classes)
            if ((c.bottom || c.top) && first_piece.count(r)) comp.unite(first_piece.at(r), rim);
        if (wall)
            for (const auto& [r, pi] : first_piece) comp.unite(pi, rim);

        std::vector<Class> ordered;
        for (const auto& [r, c] : classes) ordered.push_back(c);
        std::sort(ordered.begin(), ordered.end(), [&](const Class& a, const Class& b) {
            return compare_at_event(a.rep, b.rep, e) < 0;
        });
        for (const Class& c : ordered) {
            Vertex v;
            v.x = events_[static_cast<size_t>(e)];
            if (c.bottom || c.top) {
                v.y_is_rational = true;
                v.y_rat = c.bottom ? box_.ylo : box_.yhi;
            } else {
                const RationalFunction& f = pieces_[static_cast<size_t>(c.rep)].f;
                if (v.x.is_rational()) {
                    v.y_is_rational = true;
                    v.y_rat = f.evaluate(v.x.rational_value());
                } else {
                    v.y_is_rational = false;
                    v.y_curve = f;
                }
            }
            vertices_.push_back(std::move(v));
            bottom_rim += c.bottom ? 1 : 0;
            top_rim += c.top ? 1 : 0;
        }
        if (wall) wall_edges += static_cast<int>(ordered.size()) - 1;
        for (const auto& [pi, id] : idx) {
            const Piece& p = pieces_[static_cast<size_t>(pi)];
            if (p.left_event != e && p.right_event != e) ++splits[static_cast<size_t>(pi)];
        }
    }
    vertex_event_begin_[nev] = static_cast<int>(vertices_.size());

    edge_count_ = wall_edges;
    for (size_t pi = 0; pi < pieces_.size(); ++pi) edge_count_ += 1 + splits[pi];
    edge_count_ += (bottom_rim - 1) + (top_rim - 1) + (first_rim - 1) + (last_rim - 1);

    std::set<int> roots{comp.find(rim)};
    for (size_t pi = 0; pi < pieces_.size(); ++pi) roots.insert(comp.find(static_cast<int>(pi)));
    graph_components_ = static_cast<int>(roots.size());
}

int Arrangement::event_of(const Rational& x) const {
    auto it = std::lower_bound(events_.begin(), events_.end(), x,
                               [](const AlgebraicReal& e, const Rational& q) {
                                   return AlgebraicReal(e).compare_to(q) ==
                                          std::strong_ordering::less;
                               });
    if (it != events_.end() &&
        AlgebraicReal(*it).compare_to(x) == std::strong_ordering::equal)
        return static_cast<int>(it - events_.begin());
    return -1;
}

int Arrangement::slab_of(const Rational& x) const {
    auto it = std::upper_bound(events_.begin(), events_.end(), x,
                               [](const Rational& q, const AlgebraicReal& e) {
                                   return AlgebraicReal(e).compare_to(q) ==
                                          std::strong_ordering::greater;
                               });
    return static_cast<int>(it - events_.begin()) - 1;
}

int Arrangement::cell_count(int s) const {
    return static_cast<int>(slab_actives_[static_cast<size_t>(s)].size()) + 1;
}

int Arrangement::cell_face(int s, int c) const {
    return cell_face_[static_cast<size_t>(cell_offset_[static_cast<size_t>(s)] + c)];
}

std::pair<Rational, Rational> Arrangement::cell_bounds_at(int s, int c, const Rational& x) const {
    const auto& act = slab_actives_[static_cast<size_t>(s)];
    Rational lo = c == 0 ? box_.ylo
                         : pieces_[static_cast<size_t>(act[static_cast<size_t>(c) - 1])].f.evaluate(x);
    Rational hi = c == static_cast<int>(act.size())
                      ? box_.yhi
                      : pieces_[static_cast<size_t>(act[static_cast<size_t>(c)])].f.evaluate(x);
    return {std::move(lo), std::move(hi)};
}

Arrangement::CellCurves Arrangement::cell_curves(int s, int c) const {
    const auto& act = slab_actives_[static_cast<size_t>(s)];
    RationalFunction lo =
        c == 0 ? RationalFunction::constant(box_.ylo)
               : pieces_[static_cast<size_t>(act[static_cast<size_t>(c) - 1])].f;
    RationalFunction hi = c == static_cast<int>(act.size())
                              ? RationalFunction::constant(box_.yhi)
                              : pieces_[static_cast<size_t>(act[static_cast<size_t>(c)])].f;
    return {std::move(lo), std::move(hi)};
}

int Arrangement::find_vertex_id(int e, const Rational& y) const {
    for (int v = vertex_event_begin_[static_cast<size_t>(e)];
         v < vertex_event_begin_[static_cast<size_t>(e) + 1]; ++v) {
        const Vertex& vx = vertices_[static_cast<size_t>(v)];
        if (vx.y_is_rational && vx.y_rat == y) return v;
    }
    throw std::logic_error("arrangement: vertex lookup failed");
}

Arrangement::Location Arrangement::locate(const Rational& x, const Rational& y) const {
    if (x < box_.xlo || x > box_.xhi || y < box_.ylo || y > box_.yhi)
        throw std::domain_error("locate: outside box");
    int last = static_cast<int>(events_.size()) - 1;
    int e = event_of(x);
    if (e < 0) {
        if (y == box_.ylo || y == box_.yhi) return {Hit::Edge, -1};
        int s = slab_of(x);
        int below = 0;
        for (int pi : slab_actives_[static_cast<size_t>(s)]) {
            Rational v = pieces_[static_cast<size_t>(pi)].f.evaluate(x);
            if (v == y) return {Hit::Edge, pi};
            if (v < y) ++below;
        }
        return {Hit::Face, cell_face(s, below)};
    }

    // On an event line; x equals an event, so the event is rational and so
    // is every incident curve value.
    std::vector<int> incident;  // pieces whose closed span covers this event
    for (size_t pi = 0; pi < pieces_.size(); ++pi)
        if (pieces_[pi].left_event <= e && e <= pieces_[pi].right_event)
            incident.push_back(static_cast<int>(pi));

    if (y == box_.ylo || y == box_.yhi) {
        bool bottom = y == box_.ylo;
        Piece::Stop want = bottom ? Piece::Stop::Bottom : Piece::Stop::Top;
        bool corner = e == 0 || e == last;
        bool hit = corner || event_wall_[static_cast<size_t>(e)];
        for (int pi : incident) {
            const Piece& p = pieces_[static_cast<size_t>(pi)];
            if ((p.left_event == e && p.left_stop == want) ||
                (p.right_event == e && p.right_stop == want))
                hit = true;
        }
        if (hit) return {Hit::Vertex, find_vertex_id(e, y)};
        return {Hit::Edge, -1};
    }

    for (int pi : incident) {
        const Piece& p = pieces_[static_cast<size_t>(pi)];
        if (p.f.evaluate(x) != y) continue;
        bool endpoint = p.left_event == e || p.right_event == e;
        bool in_tag = false;
        for (const auto& [a, b] : event_tags_[static_cast<size_t>(e)])
            if (a == pi || b == pi) in_tag = true;
        if (endpoint || in_tag || event_wall_[static_cast<size_t>(e)])
            return {Hit::Vertex, find_vertex_id(e, y)};
        return {Hit::Edge, pi};
    }

    if (e == 0 || e == last || event_wall_[static_cast<size_t>(e)]) return {Hit::Edge, -1};
    int below = 0;
    for (int pi : slab_actives_[static_cast<size_t>(e) - 1])
        if (pieces_[static_cast<size_t>(pi)].f.evaluate(x) < y) ++below;
    return {Hit::Face, cell_face(e - 1, below)};
}

std::vector<Arrangement::FiberCell> Arrangement::vertical_fiber(const Rational& x0) const {
    if (x0 <= box_.xlo || x0 >= box_.xhi)
        throw std::domain_error("vertical_fiber: outside x-range");
    if (event_of(x0) >= 0) throw std::domain_error("vertical_fiber: degenerate fiber");
    int s = slab_of(x0);
    const auto& act = slab_actives_[static_cast<size_t>(s)];
    std::vector<FiberCell> out;
    Rational lo = box_.ylo;
    for (size_t i = 0; i <= act.size(); ++i) {
        Rational hi =
            i < act.size() ? pieces_[static_cast<size_t>(act[i])].f.evaluate(x0) : box_.yhi;
        out.push_back({lo, hi, cell_face(s, static_cast<int>(i))});
        lo = std::move(hi);
    }
    return out;
}

std::vector<Arrangement::FiberCell> Arrangement::fiber_faces(const Rational& x0) const {
    if (x0 <= box_.xlo || x0 >= box_.xhi)
        throw std::domain_error("fiber_faces: outside x-range");
    int e = event_of(x0);
    if (e < 0) return vertical_fiber(x0);
    if (event_wall_[static_cast<size_t>(e)]) return {};  // the line is all edge, no faces
    std::vector<Rational> cuts;
    for (const Piece& p : pieces_)
        if (p.left_event <= e && e <= p.right_event) {
            Rational v = p.f.evaluate(x0);
            if (box_.ylo < v && v < box_.yhi) cuts.push_back(std::move(v));
        }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    cuts.push_back(box_.yhi);
    std::vector<FiberCell> out;
    Rational lo = box_.ylo;
    for (const Rational& hi : cuts) {
        Location loc = locate(x0, midpoint(lo, hi));
        if (loc.kind != Hit::Face) throw std::logic_error("fiber_faces: sample off a face");
        out.push_back({lo, hi, loc.id});
        lo = hi;
    }
    return out;
}

std::pair<Rational, Rational> Arrangement::face_sample_point(int f) const {
    if (f <= 0 || f >= face_count_)
        throw std::invalid_argument("face_sample_point: not an interior face");
    for (int s = 0; s < slab_count(); ++s)
        for (int c = 0; c < cell_count(s); ++c)
            if (cell_face(s, c) == f) {
                auto [lo, hi] = cell_bounds_at(s, c, slab_sample(s));
                return {slab_sample(s), midpoint(lo, hi)};
            }
    throw std::logic_error("face_sample_point: face without cells");
}

Arrangement::FaceCells Arrangement::decompose_face(int f) const {
    if (f <= 0 || f >= face_count_)
        throw std::invalid_argument("decompose_face: not an interior face");
    FaceCells out;
    std::map<int, int> local;  // global cell id -> index into out.cells
    for (int s = 0; s < slab_count(); ++s)
        for (int c = 0; c < cell_count(s); ++c) {
            if (cell_face(s, c) != f) continue;
            auto [lo, hi] = cell_bounds_at(s, c, slab_sample(s));
            local[cell_offset_[static_cast<size_t>(s)] + c] = static_cast<int>(out.cells.size());
            out.cells.push_back({s, c, f, slab_sample(s), midpoint(lo, hi)});
        }
    for (const auto& event_pairs : glued_)
        for (const auto& [gl, gr] : event_pairs)
            if (cell_face_[static_cast<size_t>(gl)] == f)
                out.adjacency.push_back({local.at(gl), local.at(gr)});
    return out;
}

// Lexicographic (x, y) order of vertices, usable across arrangements.
int compare_arrangement_vertices(const Arrangement::Vertex& a, const Arrangement::Vertex& b) {
    int c = to_int(a.x <=> b.x);
    if (c != 0) return c;
    if (a.y_is_rational && b.y_is_rational) return (a.y_rat - b.y_rat).sign();
    AlgebraicReal x1 = a.x, x2 = a.x, x3 = a.x;
    if (a.y_is_rational)
        return -sign_at(level_poly(b.y_curve, a.y_rat), x1) * sign_at(b.y_curve.den(), x2);
    if (b.y_is_rational)
        return sign_at(level_poly(a.y_curve, b.y_rat), x1) * sign_at(a.y_curve.den(), x2);
    return sign_at(difference_numerator(a.y_curve, b.y_curve), x1) *
           sign_at(a.y_curve.den(), x2) * sign_at(b.y_curve.den(), x3);
}

}  // namespace mms
