#pragma once

#include <optional>
#include <vector>

#include "mms/curves/rational_function.hpp"
#include "mms/numeric/algebraic_real.hpp"

namespace mms {

// Graph of a rational function over an x-interval with no pole strictly
// inside; an absent endpoint means unbounded on that side.  Arcs are
// automatically x-monotone in the arrangement sense because curves are
// functions of x.
struct XMonotoneArc {
    RationalFunction curve;
    std::optional<AlgebraicReal> left, right;

    bool contains(const Rational& x) const {
        if (left && AlgebraicReal(*left).compare_to(x) != std::strong_ordering::less)
            return false;
        if (right && AlgebraicReal(*right).compare_to(x) != std::strong_ordering::greater)
            return false;
        return true;
    }
};

// Cuts the x-range at every pole of f strictly inside it; the resulting arcs
// partition the range minus the poles.  Requires left < right when both are
// present.
std::vector<XMonotoneArc> split_into_arcs(const RationalFunction& f,
                                          std::optional<AlgebraicReal> left,
                                          std::optional<AlgebraicReal> right);

}  // namespace mms
