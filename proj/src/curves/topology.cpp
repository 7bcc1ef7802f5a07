#include "mms/curves/topology.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "mms/numeric/root_isolation.hpp"

namespace mms {

namespace {

// Rational sample strictly inside each open interval delimited by the sorted
// points xs: below the first, between consecutive pairs, above the last.
template <typename Breakpoints, typename GetX>
std::vector<Rational> interval_samples(const Breakpoints& bks, GetX get_x) {
    std::vector<Rational> out;
    if (bks.empty()) {
        out.emplace_back(0);
        return out;
    }
    out.push_back(get_x(bks.front()).lower() - Rational(1));
    for (size_t i = 0; i + 1 < bks.size(); ++i)
        out.push_back(rational_between(get_x(bks[i]), get_x(bks[i + 1])));
    out.push_back(get_x(bks.back()).upper() + Rational(1));
    return out;
}

CurveTopology compute_curve_topology(const RationalFunction& f) {
    CurveTopology t;
    if (f.is_zero()) {
        t.interval_signs = {0};
        return t;
    }
    auto zeros = isolate_real_roots(f.num());
    auto poles = isolate_real_roots(f.den());
    size_t iz = 0, ip = 0;
    while (iz < zeros.size() || ip < poles.size()) {
        // coprimality rules out a tie, so a plain order check suffices
        bool take_zero = ip == poles.size() ||
                         (iz < zeros.size() &&
                          compare(zeros[iz].root, poles[ip].root) == std::strong_ordering::less);
        auto& r = take_zero ? zeros[iz++] : poles[ip++];
        t.breakpoints.push_back({std::move(r.root), !take_zero, r.multiplicity});
    }
    // Rightmost sign from the leading coefficients; walk left, flipping at
    // odd multiplicities.
    std::vector<int> signs(t.breakpoints.size() + 1);
    signs.back() = f.num().leading().sign() * f.den().leading().sign();
    for (size_t i = t.breakpoints.size(); i-- > 0;)
        signs[i] = signs[i + 1] * (t.breakpoints[i].multiplicity % 2 != 0 ? -1 : 1);
    t.interval_signs = std::move(signs);
    return t;
}

CurvePairTopology compute_pair_topology(const RationalFunction& f, const RationalFunction& g) {
    CurvePairTopology t;
    IntPolynomial r = difference_numerator(f, g);
    if (r.is_zero()) {
        t.overlap = true;
        for (auto& p : isolate_real_roots(f.den())) {
            PairBreakpoint b;
            b.x = std::move(p.root);
            b.pole_f = b.pole_g = true;
            t.breakpoints.push_back(std::move(b));
        }
        t.interval_orders.assign(t.breakpoints.size() + 1, YOrder::Equal);
        return t;
    }

    auto add = [&t](AlgebraicReal x, auto mark) {
        for (auto& b : t.breakpoints)
            if (compare(b.x, x) == std::strong_ordering::equal) {
                mark(b);
                return;
            }
        PairBreakpoint b;
        b.x = std::move(x);
        mark(b);
        t.breakpoints.push_back(std::move(b));
    };
    for (auto& p : isolate_real_roots(f.den()))
        add(std::move(p.root), [](PairBreakpoint& b) { b.pole_f = true; });
    for (auto& p : isolate_real_roots(g.den()))
        add(std::move(p.root), [](PairBreakpoint& b) { b.pole_g = true; });
    if (!r.is_constant())
        for (auto& p : isolate_real_roots(r))
            add(std::move(p.root),
                [&p](PairBreakpoint& b) { b.intersection_multiplicity = p.multiplicity; });
    std::sort(t.breakpoints.begin(), t.breakpoints.end(),
              [](const PairBreakpoint& a, const PairBreakpoint& b) {
                  return AlgebraicReal(a.x) < AlgebraicReal(b.x);
              });

    // The sign of f - g = r / (f_d g_d) is constant between breakpoints;
    // decide each interval at a rational sample.
    for (const Rational& s :
         interval_samples(t.breakpoints, [](const PairBreakpoint& b) { return b.x; })) {
        int sign = r.sign_at(s) * f.den().sign_at(s) * g.den().sign_at(s);
        t.interval_orders.push_back(sign < 0 ? YOrder::Below : YOrder::Above);
    }
    return t;
}

std::mutex cache_mutex;
std::map<RationalFunction, std::unique_ptr<const CurveTopology>>& curve_cache() {
    static std::map<RationalFunction, std::unique_ptr<const CurveTopology>> c;
    return c;
}
std::map<std::pair<RationalFunction, RationalFunction>, std::unique_ptr<const CurvePairTopology>>&
pair_cache() {
    static std::map<std::pair<RationalFunction, RationalFunction>,
                    std::unique_ptr<const CurvePairTopology>>
        c;
    return c;
}

}  // namespace

const CurveTopology& one_curve_topology(const RationalFunction& f) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& cache = curve_cache();
    auto it = cache.find(f);
    if (it == cache.end())
        it = cache.emplace(f, std::make_unique<const CurveTopology>(compute_curve_topology(f)))
                 .first;
    return *it->second;
}

const CurvePairTopology& pair_topology(const RationalFunction& f, const RationalFunction& g) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& cache = pair_cache();
    auto key = std::make_pair(f, g);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache
                 .emplace(std::move(key),
                          std::make_unique<const CurvePairTopology>(compute_pair_topology(f, g)))
                 .first;
    return *it->second;
}

namespace {

YOrder compare_from_topology(const RationalFunction& f, const RationalFunction& g,
                             AlgebraicReal x) {
    if (sign_at(f.den(), x) == 0 || sign_at(g.den(), x) == 0)
        throw std::domain_error("compare_y_at: undefined");
    const CurvePairTopology& t = pair_topology(f, g);
    if (t.overlap) return YOrder::Equal;
    size_t idx = 0;
    for (const PairBreakpoint& b : t.breakpoints) {
        AlgebraicReal bx = b.x;
        auto c = compare(x, bx);
        if (c == std::strong_ordering::equal) return YOrder::Equal;  // must be an intersection
        if (c == std::strong_ordering::less) break;
        ++idx;
    }
    return t.interval_orders[idx];
}

}  // namespace

YOrder compare_y_at(const RationalFunction& f, const RationalFunction& g, const Rational& x0) {
    return compare_from_topology(f, g, AlgebraicReal(x0));
}

YOrder compare_y_at(const RationalFunction& f, const RationalFunction& g,
                    const AlgebraicReal& x0) {
    return compare_from_topology(f, g, x0);
}

}  // namespace mms
