#pragma once

#include <vector>

#include "mms/numeric/algebraic_real.hpp"
#include "mms/numeric/polynomial.hpp"

namespace mms {

struct IsolatedRoot {
    AlgebraicReal root;
    int multiplicity = 1;
};

// All real roots of p in ascending order, with multiplicities.  p must be
// nonzero; constants have no roots.  Isolating intervals are pairwise
// disjoint, and rational roots come out exact.
std::vector<IsolatedRoot> isolate_real_roots(const IntPolynomial& p);

// Roots restricted to the closed interval [lo, hi]; isolating intervals are
// clipped to lie inside it.
std::vector<IsolatedRoot> isolate_real_roots(const IntPolynomial& p, const Rational& lo,
                                             const Rational& hi);

}  // namespace mms
