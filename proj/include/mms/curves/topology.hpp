#pragma once

#include <vector>

#include "mms/curves/rational_function.hpp"
#include "mms/numeric/algebraic_real.hpp"

namespace mms {

// Breakpoint of a single curve: a zero of the numerator or a pole.
struct CurveBreakpoint {
    AlgebraicReal x;
    bool is_pole;
    int multiplicity;
};

// Exact shape of one rational function over the x-axis: its breakpoints in
// ascending order and the constant sign on each of the open intervals
// between them (and the two unbounded ends).
struct CurveTopology {
    std::vector<CurveBreakpoint> breakpoints;
    std::vector<int> interval_signs;  // breakpoints.size() + 1 entries
};

// Breakpoint of a pair: any x where the y-order of the two curves may
// change.  A single x can play several roles at once.
struct PairBreakpoint {
    AlgebraicReal x;
    bool pole_f = false, pole_g = false;
    int intersection_multiplicity = 0;  // > 0 iff a root of the difference numerator
};

enum class YOrder { Below, Equal, Above };  // f relative to g

// Exact y-order of a pair of rational functions on each open interval
// between breakpoints.  If the curves are identical, overlap is set and
// every interval order is Equal.
struct CurvePairTopology {
    bool overlap = false;
    std::vector<PairBreakpoint> breakpoints;
    std::vector<YOrder> interval_orders;  // breakpoints.size() + 1 entries
};

// Cached topology of f.  Computed at most once per canonical curve per
// process; safe to call concurrently.  Treat the returned structure (and the
// algebraic numbers inside) as immutable: copy an AlgebraicReal before any
// refining comparison.
const CurveTopology& one_curve_topology(const RationalFunction& f);

// Cached topology of the ordered pair (f, g); same contract.
const CurvePairTopology& pair_topology(const RationalFunction& f, const RationalFunction& g);

// Exact order of f vs g at x0, answered from the cached pair topology.
// Throws "undefined" if x0 is a pole of f or g.
YOrder compare_y_at(const RationalFunction& f, const RationalFunction& g, const Rational& x0);
YOrder compare_y_at(const RationalFunction& f, const RationalFunction& g,
                    const AlgebraicReal& x0);

}  // namespace mms
