#include "mms/curves/arcs.hpp"

#include <stdexcept>
#include <utility>

#include "mms/numeric/root_isolation.hpp"

namespace mms {

std::vector<XMonotoneArc> split_into_arcs(const RationalFunction& f,
                                          std::optional<AlgebraicReal> left,
                                          std::optional<AlgebraicReal> right) {
    if (left && right && compare(*left, *right) != std::strong_ordering::less)
        throw std::invalid_argument("split_into_arcs: empty x-range");

    std::vector<AlgebraicReal> cuts;
    for (auto& p : isolate_real_roots(f.den())) {
        if (left && compare(*left, p.root) != std::strong_ordering::less) continue;
        if (right && compare(p.root, *right) != std::strong_ordering::less) continue;
        cuts.push_back(std::move(p.root));
    }

    std::vector<XMonotoneArc> arcs;
    std::optional<AlgebraicReal> prev = std::move(left);
    for (AlgebraicReal& c : cuts) {
        arcs.push_back({f, std::move(prev), c});
        prev = std::move(c);
    }
    arcs.push_back({f, std::move(prev), std::move(right)});
    return arcs;
}

}  // namespace mms
