#include "mms/manifolds/constraints.hpp"

namespace mms {

std::optional<Rational> chart_tau(const RationalRotation& r, Chart chart) {
    if (chart == Chart::A) {
        if (r.is_half_turn()) return std::nullopt;
        return r.tau();
    }
    if (r.is_identity()) return std::nullopt;
    return r.composed(RationalRotation::half_turn()).tau();
}

RationalRotation chart_rotation(const Rational& t, Chart chart) {
    RationalRotation m = RationalRotation::from_tau(t);
    return chart == Chart::A ? m : m.composed(RationalRotation::half_turn());
}

}  // namespace mms
