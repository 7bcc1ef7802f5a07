#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "mms/curves/arcs.hpp"
#include "mms/curves/rational_function.hpp"
#include "mms/curves/topology.hpp"
#include "mms/numeric/root_isolation.hpp"

using namespace mms;

namespace {

RationalFunction rf(std::initializer_list<long long> num, std::initializer_list<long long> den) {
    return {IntPolynomial(num), IntPolynomial(den)};
}

// Direct order of f vs g at a sample: sign of r * f_d * g_d.
YOrder direct_order(const RationalFunction& f, const RationalFunction& g, const Rational& x) {
    int s = difference_numerator(f, g).sign_at(x) * f.den().sign_at(x) * g.den().sign_at(x);
    return s < 0 ? YOrder::Below : s > 0 ? YOrder::Above : YOrder::Equal;
}

// One rational sample per open interval delimited by the breakpoint x's.
template <typename B, typename GetX>
std::vector<Rational> samples_of(const std::vector<B>& bks, GetX get_x) {
    std::vector<Rational> out;
    if (bks.empty()) return {Rational(0)};
    out.push_back(get_x(bks.front()).lower() - Rational(1));
    for (size_t i = 0; i + 1 < bks.size(); ++i)
        out.push_back(rational_between(get_x(bks[i]), get_x(bks[i + 1])));
    out.push_back(get_x(bks.back()).upper() + Rational(1));
    return out;
}

IntPolynomial random_poly(std::mt19937_64& rng, int max_deg, bool nonzero) {
    std::uniform_int_distribution<int> deg(0, max_deg), coeff(-5, 5);
    for (;;) {
        std::vector<BigInt> c(static_cast<size_t>(deg(rng)) + 1);
        for (BigInt& v : c) v = coeff(rng);
        IntPolynomial p{std::move(c)};
        if (!nonzero || !p.is_zero()) return p;
    }
}

}  // namespace

TEST_CASE("rational function canonical form") {
    // common polynomial factor cancels
    RationalFunction a(IntPolynomial{-1, 0, 1} * IntPolynomial{2, 1},
                       IntPolynomial{1, 1} * IntPolynomial{2, 1});
    CHECK(a == rf({-1, 1}, {1}));
    // contents reduced jointly (value preserved)
    CHECK(rf({0, 6}, {4}) == rf({0, 3}, {2}));
    CHECK(rf({0, 6}, {4}).evaluate(Rational(1)) == Rational(3, 2));
    // denominator leading coefficient made positive
    RationalFunction b = rf({0, 1}, {1, -1});
    CHECK(b.den().leading() > 0);
    CHECK(b.evaluate(Rational(1, 2)) == Rational(1));
    // zero numerator collapses the denominator
    CHECK(rf({}, {5}).is_zero());
    CHECK(rf({}, {5}).den() == IntPolynomial{1});
    CHECK_THROWS_AS(rf({1}, {}), std::invalid_argument);
    CHECK(RationalFunction::constant(Rational(5, 3)) == rf({5}, {3}));

    CHECK(rf({1, 0, 1}, {0, 1}).evaluate(Rational(2)) == Rational(5, 2));
    CHECK_THROWS_AS(rf({1, 0, 1}, {0, 1}).evaluate(Rational(0)), std::domain_error);
    CHECK(rf({1, 0, 3}, {2, 0, 2}).evaluate(Rational(1)) == Rational(1));
    CHECK(rf({1, 0, 3}, {2, 0, 2}).sign_at(Rational(-7)) == 1);

    // arithmetic agrees with pointwise arithmetic wherever defined
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> num(-9, 9);
    for (int round = 0; round < 50; ++round) {
        RationalFunction f(random_poly(rng, 2, false), random_poly(rng, 2, true));
        RationalFunction g(random_poly(rng, 2, false), random_poly(rng, 2, true));
        Rational x(num(rng), 7);
        if (f.has_pole_at(x) || g.has_pole_at(x)) continue;
        CHECK((f + g).evaluate(x) == f.evaluate(x) + g.evaluate(x));
        CHECK((f - g).evaluate(x) == f.evaluate(x) - g.evaluate(x));
        CHECK((f * g).evaluate(x) == f.evaluate(x) * g.evaluate(x));
        CHECK((-f).evaluate(x) == -f.evaluate(x));
        if (!g.is_zero() && g.evaluate(x) != Rational(0) && !(f / g).has_pole_at(x))
            CHECK((f / g).evaluate(x) == f.evaluate(x) / g.evaluate(x));
    }
}

TEST_CASE("single curve topology") {
    {
        const CurveTopology& t = one_curve_topology(rf({1}, {0, 1}));  // 1/x
        REQUIRE(t.breakpoints.size() == 1);
        CHECK(t.breakpoints[0].is_pole);
        CHECK(t.breakpoints[0].multiplicity == 1);
        CHECK(AlgebraicReal(t.breakpoints[0].x) == Rational(0));
        CHECK(t.interval_signs == std::vector<int>{-1, 1});
    }
    {
        const CurveTopology& t = one_curve_topology(rf({-1, 0, 1}, {1, 0, 1}));
        REQUIRE(t.breakpoints.size() == 2);
        CHECK_FALSE(t.breakpoints[0].is_pole);
        CHECK_FALSE(t.breakpoints[1].is_pole);
        CHECK(AlgebraicReal(t.breakpoints[0].x) == Rational(-1));
        CHECK(AlgebraicReal(t.breakpoints[1].x) == Rational(1));
        CHECK(t.interval_signs == std::vector<int>{1, -1, 1});
    }
    {
        // (x-1)^2 / x: even multiplicity does not flip the sign
        const CurveTopology& t = one_curve_topology(rf({1, -2, 1}, {0, 1}));
        REQUIRE(t.breakpoints.size() == 2);
        CHECK(t.breakpoints[0].is_pole);
        CHECK_FALSE(t.breakpoints[1].is_pole);
        CHECK(t.breakpoints[1].multiplicity == 2);
        CHECK(t.interval_signs == std::vector<int>{-1, 1, 1});
    }
    CHECK(one_curve_topology(RationalFunction()).interval_signs == std::vector<int>{0});
    CHECK(one_curve_topology(rf({-3}, {1})).interval_signs == std::vector<int>{-1});

    // cache: canonical-equal inputs share one computed topology
    CHECK(&one_curve_topology(rf({-2, 0, 2}, {2, 0, 2})) ==
          &one_curve_topology(rf({-1, 0, 1}, {1, 0, 1})));

    // oracle: cached interval signs equal direct evaluation at interval samples
    std::mt19937_64 rng(77);
    for (int round = 0; round < 200; ++round) {
        RationalFunction f(random_poly(rng, 4, false), random_poly(rng, 4, true));
        const CurveTopology& t = one_curve_topology(f);
        auto xs = samples_of(t.breakpoints, [](const CurveBreakpoint& b) { return b.x; });
        REQUIRE(xs.size() == t.interval_signs.size());
        for (size_t i = 0; i < xs.size(); ++i) {
            if (f.is_zero()) {
                CHECK(t.interval_signs[i] == 0);
                continue;
            }
            CHECK(t.interval_signs[i] == f.num().sign_at(xs[i]) * f.den().sign_at(xs[i]));
        }
        // breakpoints really are roots of the right polynomial
        for (const CurveBreakpoint& b : t.breakpoints)
            CHECK(sign_at(b.is_pole ? f.den() : f.num(), b.x) == 0);
    }
}

TEST_CASE("pair topology") {
    {
        const CurvePairTopology& t = pair_topology(rf({0, 1}, {1}), rf({0, -1}, {1}));
        REQUIRE(t.breakpoints.size() == 1);
        CHECK_FALSE(t.overlap);
        CHECK(t.breakpoints[0].intersection_multiplicity == 1);
        CHECK_FALSE(t.breakpoints[0].pole_f);
        CHECK(AlgebraicReal(t.breakpoints[0].x) == Rational(0));
        CHECK(t.interval_orders == std::vector<YOrder>{YOrder::Below, YOrder::Above});
    }
    {
        // f = 1/x, g = x: r = 1 - x^2
        const CurvePairTopology& t = pair_topology(rf({1}, {0, 1}), rf({0, 1}, {1}));
        REQUIRE(t.breakpoints.size() == 3);
        CHECK(AlgebraicReal(t.breakpoints[0].x) == Rational(-1));
        CHECK(t.breakpoints[0].intersection_multiplicity == 1);
        CHECK(t.breakpoints[1].pole_f);
        CHECK_FALSE(t.breakpoints[1].pole_g);
        CHECK(t.breakpoints[1].intersection_multiplicity == 0);
        CHECK(AlgebraicReal(t.breakpoints[2].x) == Rational(1));
        CHECK(t.interval_orders == std::vector<YOrder>{YOrder::Above, YOrder::Below,
                                                       YOrder::Above, YOrder::Below});
    }
    {
        const CurvePairTopology& t = pair_topology(rf({2, 1}, {-3, 1}), rf({2, 1}, {-3, 1}));
        CHECK(t.overlap);
        REQUIRE(t.breakpoints.size() == 1);
        CHECK(t.breakpoints[0].pole_f);
        CHECK(t.breakpoints[0].pole_g);
        CHECK(t.interval_orders == std::vector<YOrder>{YOrder::Equal, YOrder::Equal});
    }
    {
        // tangential (even) intersection: no order swap
        const CurvePairTopology& t = pair_topology(rf({0, 0, 1}, {1}), RationalFunction());
        REQUIRE(t.breakpoints.size() == 1);
        CHECK(t.breakpoints[0].intersection_multiplicity == 2);
        CHECK(t.interval_orders == std::vector<YOrder>{YOrder::Above, YOrder::Above});
    }

    // oracle: cached orders match direct evaluation; antisymmetry holds
    std::mt19937_64 rng(31);
    for (int round = 0; round < 200; ++round) {
        RationalFunction f(random_poly(rng, 4, false), random_poly(rng, 4, true));
        RationalFunction g(random_poly(rng, 4, false), random_poly(rng, 4, true));
        const CurvePairTopology& t = pair_topology(f, g);
        const CurvePairTopology& s = pair_topology(g, f);
        REQUIRE(t.breakpoints.size() == s.breakpoints.size());
        CHECK(t.overlap == s.overlap);
        auto xs = samples_of(t.breakpoints, [](const PairBreakpoint& b) { return b.x; });
        REQUIRE(xs.size() == t.interval_orders.size());
        for (size_t i = 0; i < xs.size(); ++i)
            CHECK(t.interval_orders[i] == direct_order(f, g, xs[i]));
        // every intersection breakpoint solves f = g exactly
        IntPolynomial r = difference_numerator(f, g);
        for (const PairBreakpoint& b : t.breakpoints)
            if (b.intersection_multiplicity > 0) CHECK(sign_at(r, b.x) == 0);
    }
}

TEST_CASE("compare y order at a point") {
    CHECK(compare_y_at(rf({0, 0, 1}, {1}), rf({1, 1}, {1}), Rational(0)) == YOrder::Below);
    CHECK(compare_y_at(rf({1}, {0, 1}), rf({0, 1}, {1}), Rational(1)) == YOrder::Equal);
    CHECK(compare_y_at(rf({1}, {0, 1}), rf({0, 1}, {1}), Rational(1, 2)) == YOrder::Above);
    CHECK(compare_y_at(rf({1}, {0, 1}), rf({0, 1}, {1}), Rational(2)) == YOrder::Below);
    CHECK_THROWS_WITH_AS(compare_y_at(rf({1}, {0, 1}), rf({0, 1}, {1}), Rational(0)),
                         doctest::Contains("undefined"), std::domain_error);

    // algebraic probe: f = (3x^2+1)/(2x^2+2) vs 1 at sqrt(2)
    AlgebraicReal sqrt2(IntPolynomial{-2, 0, 1}, Rational(1), Rational(2));
    CHECK(compare_y_at(rf({1, 0, 3}, {2, 0, 2}), RationalFunction::constant(Rational(1)),
                       sqrt2) == YOrder::Above);

    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> num(-20, 20);
    for (int round = 0; round < 100; ++round) {
        RationalFunction f(random_poly(rng, 3, false), random_poly(rng, 3, true));
        RationalFunction g(random_poly(rng, 3, false), random_poly(rng, 3, true));
        Rational x(num(rng), 9);
        if (f.has_pole_at(x) || g.has_pole_at(x)) continue;
        YOrder a = compare_y_at(f, g, x);
        YOrder b = compare_y_at(g, f, x);
        CHECK(a == direct_order(f, g, x));
        CHECK((a == YOrder::Equal) == (b == YOrder::Equal));
        if (a != YOrder::Equal) CHECK((a == YOrder::Below) == (b == YOrder::Above));
    }
}

TEST_CASE("splitting into x-monotone arcs") {
    auto one = split_into_arcs(rf({0, 1}, {1}), AlgebraicReal(Rational(0)),
                               AlgebraicReal(Rational(1)));
    CHECK(one.size() == 1);

    auto two = split_into_arcs(rf({1}, {0, 1}), AlgebraicReal(Rational(-1)),
                               AlgebraicReal(Rational(1)));
    REQUIRE(two.size() == 2);
    CHECK(AlgebraicReal(*two[0].right) == Rational(0));
    CHECK(AlgebraicReal(*two[1].left) == Rational(0));
    CHECK(two[0].contains(Rational(-1, 2)));
    CHECK_FALSE(two[0].contains(Rational(0)));
    CHECK_FALSE(two[0].contains(Rational(-1)));

    auto three = split_into_arcs(rf({0, 1}, {-1, 0, 1}), AlgebraicReal(Rational(-2)),
                                 AlgebraicReal(Rational(2)));
    CHECK(three.size() == 3);

    auto unbounded = split_into_arcs(rf({1}, {0, 1}), std::nullopt, std::nullopt);
    REQUIRE(unbounded.size() == 2);
    CHECK_FALSE(unbounded[0].left.has_value());
    CHECK_FALSE(unbounded[1].right.has_value());
    CHECK(unbounded[1].contains(Rational(1000000)));

    CHECK_THROWS_AS(split_into_arcs(rf({0, 1}, {1}), AlgebraicReal(Rational(1)),
                                    AlgebraicReal(Rational(1))),
                    std::invalid_argument);
}

TEST_CASE("level polynomial") {
    RationalFunction f = rf({1, 0, 1}, {0, 1});
    IntPolynomial lvl = level_poly(f, Rational(2));
    auto roots = isolate_real_roots(lvl);
    REQUIRE(roots.size() == 1);
    CHECK(AlgebraicReal(roots[0].root) == Rational(1));
    CHECK(f.evaluate(Rational(1)) == Rational(2));

    CHECK(difference_numerator(f, f).is_zero());
    CHECK_FALSE(difference_numerator(f, rf({0, 1}, {1})).is_zero());
}
