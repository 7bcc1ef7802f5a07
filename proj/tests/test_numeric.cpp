#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "mms/numeric/algebraic_real.hpp"
#include "mms/numeric/polynomial.hpp"
#include "mms/numeric/rational.hpp"
#include "mms/numeric/root_isolation.hpp"

using namespace mms;

namespace {

// ---- Sturm-sequence oracle over rational polynomials ----------------------
// Independent of the library's Descartes machinery: plain rational-coefficient
// remainder sequences, used to cross-check root counts.

using RatPoly = std::vector<Rational>;  // low -> high

RatPoly rp_trim(RatPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

RatPoly rp_from(const IntPolynomial& p) {
    RatPoly r;
    for (int i = 0; i <= p.degree(); ++i) r.emplace_back(p.coeff(i));
    return rp_trim(r);
}

RatPoly rp_derive(const RatPoly& p) {
    RatPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(BigInt(static_cast<long>(i))));
    return rp_trim(d);
}

Rational rp_eval(const RatPoly& p, const Rational& x) {
    Rational acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly rp_neg_rem(RatPoly a, const RatPoly& b) {
    a = rp_trim(std::move(a));
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a = rp_trim(std::move(a));
    }
    for (Rational& c : a) c = -c;
    return a;
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain{rp_trim(p)};
    RatPoly d = rp_derive(chain[0]);
    if (d.empty()) return chain;
    chain.push_back(std::move(d));
    for (;;) {
        RatPoly r = rp_neg_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_changes_at(const std::vector<RatPoly>& chain, const Rational& x) {
    int changes = 0, last = 0;
    for (const RatPoly& p : chain) {
        int s = rp_eval(p, x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// Distinct real roots of p in (a, b); requires p(a) != 0 and p(b) != 0.
int sturm_count(const IntPolynomial& p, const Rational& a, const Rational& b) {
    RatPoly rp = rp_from(p);
    REQUIRE(!rp_eval(rp, a).is_zero());
    REQUIRE(!rp_eval(rp, b).is_zero());
    auto chain = sturm_chain(rp);
    return sign_changes_at(chain, a) - sign_changes_at(chain, b);
}

// Bound with all real roots of p strictly inside (-B, B).
Rational root_bound(const IntPolynomial& p) {
    Rational maxc;
    for (int i = 0; i < p.degree(); ++i) maxc = std::max(maxc, Rational(abs_of(p.coeff(i))));
    return Rational(2) + maxc / Rational(abs_of(p.leading()));
}

std::mt19937_64 rng(20240811);

long rnd_int(long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

IntPolynomial rnd_poly(int max_deg, long coeff_mag) {
    int deg = static_cast<int>(rnd_int(1, max_deg));
    std::vector<BigInt> c(static_cast<size_t>(deg) + 1);
    for (auto& v : c) v = rnd_int(-coeff_mag, coeff_mag);
    while (c.back().is_zero()) c.back() = rnd_int(-coeff_mag, coeff_mag);
    return IntPolynomial(std::move(c));
}

Rational rnd_rational(long mag) {
    return Rational(BigInt(rnd_int(-mag, mag)), BigInt(rnd_int(1, mag)));
}

}  // namespace

TEST_CASE("rational arithmetic and canonical form") {
    Rational a(BigInt(6), BigInt(-4));
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(a.to_string() == "-3/2");
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(7, 2) * Rational(2, 7)) == Rational(1));
    CHECK((Rational(1) / Rational(-3)).to_string() == "-1/3");
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5, 3) < Rational(-3, 2));
    CHECK(midpoint(Rational(0), Rational(1)) == Rational(1, 2));
    CHECK(Rational(3, 4).reciprocal() == Rational(4, 3));
    CHECK(Rational(-3, 4).reciprocal() == Rational(-4, 3));
    CHECK(Rational(-7, 3).abs() == Rational(7, 3));

    for (int i = 0; i < 200; ++i) {
        Rational x = rnd_rational(50), y = rnd_rational(50);
        CHECK((x + y) - y == x);
        if (!y.is_zero()) CHECK((x * y) / y == x);
        CHECK(-(-x) == x);
        CHECK((x - y).sign() == (x < y ? -1 : (x == y ? 0 : 1)));
    }
}

TEST_CASE("rational parse and formatting") {
    CHECK(Rational::parse("3").value() == Rational(3));
    CHECK(Rational::parse("-7/2").value() == Rational(-7, 2));
    CHECK(Rational::parse("1.25").value() == Rational(5, 4));
    CHECK(Rational::parse("-0.5e2").value() == Rational(-50));
    CHECK(Rational::parse("2.5e-1").value() == Rational(1, 4));
    CHECK(!Rational::parse("").has_value());
    CHECK(!Rational::parse("abc").has_value());
    CHECK(!Rational::parse("1/0").has_value());
    for (int i = 0; i < 100; ++i) {
        Rational x = rnd_rational(1000);
        CHECK(Rational::parse(x.to_string()).value() == x);
    }
}

TEST_CASE("rational double conversions") {
    CHECK(Rational::from_double(0.5) == Rational(1, 2));
    CHECK(Rational::from_double(-0.375) == Rational(-3, 8));
    CHECK(Rational::from_double(3.0) == Rational(3));
    for (int i = 0; i < 100; ++i) {
        double d = static_cast<double>(static_cast<long>(rng() % 2000001) - 1000000) / 1024.0;
        CHECK(Rational::from_double(d).to_double() == d);
    }
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    // Big numerator/denominator still round correctly.
    Rational big(BigInt(1) << 200, (BigInt(1) << 200) + 1);
    CHECK(big.to_double() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("polynomial evaluation and arithmetic") {
    IntPolynomial p{-2, 0, 1};  // x^2 - 2
    CHECK(p.degree() == 2);
    CHECK(p.eval(BigInt(3)) == 7);
    CHECK(p.eval(Rational(3, 2)) == Rational(1, 4));
    CHECK(p.sign_at(Rational(1)) == -1);
    CHECK(p.sign_at(Rational(2)) == 1);
    CHECK(p.derivative() == IntPolynomial{0, 2});

    IntPolynomial q{1, 1};  // x + 1
    CHECK(p * q == IntPolynomial{-2, -2, 1, 1});
    CHECK(p + q == IntPolynomial{-1, 1, 1});
    CHECK((p - p).is_zero());

    for (int i = 0; i < 100; ++i) {
        IntPolynomial a = rnd_poly(5, 10), b = rnd_poly(5, 10);
        Rational x = rnd_rational(20);
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
        CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
        CHECK(a.sign_at(x) == a.eval(x).sign());
    }
}

TEST_CASE("polynomial content, gcd, exact division") {
    IntPolynomial p{-4, 0, 2};  // 2x^2 - 4
    CHECK(p.content() == 2);
    CHECK(p.primitive_part() == IntPolynomial{-2, 0, 1});
    CHECK((-p).canonical() == IntPolynomial{-2, 0, 1});

    // gcd(x^2 - 1, x^2 - 3x + 2) = x - 1
    CHECK(poly_gcd(IntPolynomial{-1, 0, 1}, IntPolynomial{2, -3, 1}) == IntPolynomial{-1, 1});
    CHECK(have_common_root(IntPolynomial{-1, 0, 1}, IntPolynomial{2, -3, 1}));
    CHECK(!have_common_root(IntPolynomial{-2, 0, 1}, IntPolynomial{-3, 0, 1}));

    IntPolynomial a{1, 2, 1};   // (x+1)^2
    IntPolynomial b{1, 1};      // x+1
    CHECK(exact_divide(a, b) == b);
    CHECK_THROWS_AS(exact_divide(IntPolynomial{1, 0, 1}, IntPolynomial{1, 1}), std::logic_error);

    for (int i = 0; i < 100; ++i) {
        IntPolynomial u = rnd_poly(4, 8), v = rnd_poly(4, 8);
        CHECK(exact_divide(u * v, v) == u);
        CHECK(poly_gcd(u * v, v) == v.canonical());
    }
}

TEST_CASE("square-free part and decomposition") {
    // (x-1)^2 (x+3) = x^3 + x^2 - 5x + 3
    IntPolynomial p = IntPolynomial{-1, 1} * IntPolynomial{-1, 1} * IntPolynomial{3, 1};
    CHECK(p == IntPolynomial{3, -5, 1, 1});
    CHECK(square_free_part(p) == IntPolynomial{-3, 2, 1});  // (x-1)(x+3)

    auto dec = square_free_decomposition(p);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == IntPolynomial{3, 1});
    CHECK(dec[0].second == 1);
    CHECK(dec[1].first == IntPolynomial{-1, 1});
    CHECK(dec[1].second == 2);

    for (int i = 0; i < 50; ++i) {
        IntPolynomial f = rnd_poly(3, 5).canonical();
        IntPolynomial g = rnd_poly(2, 5).canonical();
        if (f.is_constant() || g.is_constant()) continue;
        IntPolynomial prod = f * f * f * g;
        auto d = square_free_decomposition(prod);
        IntPolynomial rebuilt{1};
        for (auto& [fac, m] : d)
            for (int k = 0; k < m; ++k) rebuilt = rebuilt * fac;
        CHECK(rebuilt == prod.canonical());
    }
}

TEST_CASE("descartes transforms") {
    IntPolynomial p{-2, 0, 1};  // x^2 - 2
    CHECK(p.reversed() == IntPolynomial{1, 0, -2});
    CHECK(p.taylor_shift_1() == IntPolynomial{-1, 2, 1});  // (x+1)^2 - 2
    CHECK(p.half_scale() == IntPolynomial{-8, 0, 1});      // 4((x/2)^2 - 2)
    CHECK(p.scale_pow2(2) == IntPolynomial{-2, 0, 16});    // (4x)^2 - 2
    CHECK(IntPolynomial{0, 1}.reversed() == IntPolynomial{1});
    for (int i = 0; i < 100; ++i) {
        IntPolynomial a = rnd_poly(6, 12);
        Rational x = rnd_rational(10);
        CHECK(a.taylor_shift_1().eval(x) == a.eval(x + Rational(1)));
        if (!x.is_zero()) {
            Rational xpow(1);
            for (int k = 0; k < a.degree(); ++k) xpow *= x;
            CHECK(a.reversed().eval(x) == xpow * a.eval(x.reciprocal()));
        }
    }
}

TEST_CASE("root isolation: worked examples") {
    auto r = isolate_real_roots(IntPolynomial{-2, 0, 1});  // x^2 - 2
    REQUIRE(r.size() == 2);
    CHECK(r[0].multiplicity == 1);
    CHECK(r[1].multiplicity == 1);
    CHECK(r[0].root.to_double() == doctest::Approx(-1.4142135624).epsilon(1e-9));
    CHECK(r[1].root.to_double() == doctest::Approx(1.4142135624).epsilon(1e-9));

    // (x-1)^2 (x+3): roots -3 (simple) and 1 (double)
    auto r2 = isolate_real_roots(IntPolynomial{3, -5, 1, 1});
    REQUIRE(r2.size() == 2);
    CHECK(r2[0].root == Rational(-3));
    CHECK(r2[0].multiplicity == 1);
    CHECK(r2[1].root == Rational(1));
    CHECK(r2[1].multiplicity == 2);

    CHECK(isolate_real_roots(IntPolynomial{1, 0, 1}).empty());  // x^2 + 1

    // x(x-1)(x+1): zero root handled by stripping
    auto r3 = isolate_real_roots(IntPolynomial{0, -1, 0, 1});
    REQUIRE(r3.size() == 3);
    CHECK(r3[0].root == Rational(-1));
    CHECK(r3[1].root == Rational(0));
    CHECK(r3[2].root == Rational(1));

    // All-rational non-dyadic roots 1/4, 1/3, 1/2 — exercises the
    // adjacent-rational-root shrink paths.
    IntPolynomial cube = IntPolynomial{-1, 4} * IntPolynomial{-1, 2} * IntPolynomial{-1, 3};
    auto r4 = isolate_real_roots(cube);
    REQUIRE(r4.size() == 3);
    CHECK(r4[0].root == Rational(1, 4));
    CHECK(r4[1].root == Rational(1, 3));
    CHECK(r4[2].root == Rational(1, 2));

    // Ten rational roots 1..10
    IntPolynomial w{1};
    for (long k = 1; k <= 10; ++k) w = w * IntPolynomial{-k, 1};
    auto r5 = isolate_real_roots(w);
    REQUIRE(r5.size() == 10);
    for (long k = 1; k <= 10; ++k) CHECK(r5[static_cast<size_t>(k - 1)].root == Rational(BigInt(k)));
}

TEST_CASE("root isolation agrees with the Sturm oracle") {
    int nontrivial = 0;
    for (int iter = 0; iter < 300; ++iter) {
        IntPolynomial p = rnd_poly(8, 30);
        if (p.is_constant()) continue;
        auto roots = isolate_real_roots(p);
        Rational b = root_bound(p);
        CHECK(static_cast<int>(roots.size()) == sturm_count(p, -b, b));
        int mult_sum = 0;
        for (auto& ir : roots) {
            mult_sum += ir.multiplicity;
            if (ir.root.is_rational()) {
                CHECK(p.sign_at(ir.root.rational_value()) == 0);
            } else {
                CHECK(sturm_count(p, ir.root.lower(), ir.root.upper()) == 1);
            }
        }
        // Non-real roots come in conjugate pairs.
        CHECK((p.degree() - mult_sum) % 2 == 0);
        if (!roots.empty()) ++nontrivial;
    }
    CHECK(nontrivial > 100);
}

TEST_CASE("root isolation with multiplicities agrees on constructed products") {
    for (int iter = 0; iter < 60; ++iter) {
        // Product of distinct linear factors with chosen multiplicities.
        long a = rnd_int(-6, 6), b = a + rnd_int(1, 5), c = b + rnd_int(1, 5);
        int ma = static_cast<int>(rnd_int(1, 3)), mb = static_cast<int>(rnd_int(1, 3)),
            mc = static_cast<int>(rnd_int(1, 2));
        IntPolynomial p{1};
        for (int i = 0; i < ma; ++i) p = p * IntPolynomial{-a, 1};
        for (int i = 0; i < mb; ++i) p = p * IntPolynomial{-b, 1};
        for (int i = 0; i < mc; ++i) p = p * IntPolynomial{-c, 1};
        auto roots = isolate_real_roots(p);
        REQUIRE(roots.size() == 3);
        CHECK(roots[0].root == Rational(BigInt(a)));
        CHECK(roots[0].multiplicity == ma);
        CHECK(roots[1].root == Rational(BigInt(b)));
        CHECK(roots[1].multiplicity == mb);
        CHECK(roots[2].root == Rational(BigInt(c)));
        CHECK(roots[2].multiplicity == mc);
    }
}

TEST_CASE("root isolation restricted to an interval") {
    IntPolynomial p{-2, 0, 1};  // x^2 - 2
    auto in = isolate_real_roots(p, Rational(1), Rational(2));
    REQUIRE(in.size() == 1);
    CHECK(in[0].root.lower() >= Rational(1));
    CHECK(in[0].root.upper() <= Rational(2));
    CHECK(in[0].root.to_double() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(isolate_real_roots(p, Rational(2), Rational(3)).empty());
    auto both = isolate_real_roots(p, Rational(-2), Rational(2));
    CHECK(both.size() == 2);
    // Closed-interval semantics keeps endpoint roots.
    auto endpoint = isolate_real_roots(IntPolynomial{-1, 1}, Rational(0), Rational(1));
    REQUIRE(endpoint.size() == 1);
    CHECK(endpoint[0].root == Rational(1));
}

TEST_CASE("algebraic real refinement and conversion") {
    auto roots = isolate_real_roots(IntPolynomial{-2, 0, 0, 1});  // x^3 - 2
    REQUIRE(roots.size() == 1);
    AlgebraicReal r = roots[0].root;
    r.refine_below(Rational(1, 1000000));
    CHECK(r.upper() - r.lower() <= Rational(1, 1000000));
    double cbrt2 = std::cbrt(2.0);
    CHECK(r.lower().to_double() <= cbrt2);
    CHECK(r.upper().to_double() >= cbrt2);
    CHECK(r.to_double() == doctest::Approx(cbrt2).epsilon(1e-12));

    AlgebraicReal copy = roots[0].root;
    for (int i = 0; i < 40; ++i) copy.refine();
    CHECK(copy == roots[0].root);
}

TEST_CASE("algebraic real comparisons") {
    AlgebraicReal sqrt2(IntPolynomial{-2, 0, 1}, Rational(1), Rational(2));
    AlgebraicReal sqrt3(IntPolynomial{-3, 0, 1}, Rational(1), Rational(2));
    AlgebraicReal sqrt2_again(IntPolynomial{-2, 0, 1}, Rational(0), Rational(3, 2));

    CHECK(sqrt2.compare_to(Rational(3, 2)) == std::strong_ordering::less);
    CHECK(sqrt2.compare_to(Rational(1)) == std::strong_ordering::greater);
    CHECK(sqrt2 == sqrt2_again);
    CHECK((sqrt3 <=> sqrt2) == std::strong_ordering::greater);
    CHECK((sqrt2 <=> sqrt3) == std::strong_ordering::less);

    // Same value reached through different polynomials.
    AlgebraicReal two_as_root(IntPolynomial{-4, 0, 1}, Rational(1), Rational(3));
    CHECK(two_as_root == Rational(2));
    CHECK(two_as_root == AlgebraicReal(Rational(2)));

    AlgebraicReal zero;
    CHECK(zero.sign() == 0);
    CHECK(sqrt2.sign() == 1);
    AlgebraicReal neg(IntPolynomial{-2, 0, 1}, Rational(-2), Rational(-1));
    CHECK(neg.sign() == -1);
}

TEST_CASE("sign_at on algebraic points") {
    AlgebraicReal sqrt3(IntPolynomial{-3, 0, 1}, Rational(1), Rational(2));
    CHECK(sign_at(IntPolynomial{0, -1, 0, 1}, sqrt3) == 1);   // x^3 - x at sqrt(3)
    CHECK(sign_at(IntPolynomial{-3, 0, 1}, sqrt3) == 0);      // its own polynomial
    CHECK(sign_at(IntPolynomial{-2, 0, 1}, sqrt3) == 1);      // x^2 - 2 > 0 there
    CHECK(sign_at(IntPolynomial{-4, 0, 1}, sqrt3) == -1);     // x^2 - 4 < 0 there
    AlgebraicReal r(Rational(1, 2));
    CHECK(sign_at(IntPolynomial{-1, 2}, r) == 0);  // 2x - 1

    // Multiplicativity on random inputs.
    for (int iter = 0; iter < 60; ++iter) {
        IntPolynomial base = rnd_poly(5, 12);
        if (base.is_constant()) continue;
        auto roots = isolate_real_roots(base);
        if (roots.empty()) continue;
        AlgebraicReal& x = roots[static_cast<size_t>(rnd_int(0, static_cast<long>(roots.size()) - 1))].root;
        IntPolynomial p = rnd_poly(4, 9), q = rnd_poly(4, 9);
        CHECK(sign_at(p * q, x) == sign_at(p, x) * sign_at(q, x));
    }
}

TEST_CASE("algebraic reals form a total order") {
    // Pool of roots from several polynomials plus rationals.
    std::vector<AlgebraicReal> pool;
    for (int i = 0; i < 12; ++i) {
        IntPolynomial p = rnd_poly(5, 20);
        if (p.is_constant()) continue;
        for (auto& ir : isolate_real_roots(p)) pool.push_back(ir.root);
    }
    for (int i = 0; i < 8; ++i) pool.emplace_back(rnd_rational(10));
    REQUIRE(pool.size() >= 10);
    if (pool.size() > 18) pool.resize(18);

    auto ord = [](const AlgebraicReal& a, const AlgebraicReal& b) { return a <=> b; };
    for (size_t i = 0; i < pool.size(); ++i) {
        CHECK(ord(pool[i], pool[i]) == std::strong_ordering::equal);
        for (size_t j = 0; j < pool.size(); ++j) {
            auto ab = ord(pool[i], pool[j]), ba = ord(pool[j], pool[i]);
            CHECK((ab == std::strong_ordering::equal) == (ba == std::strong_ordering::equal));
            if (ab == std::strong_ordering::less) CHECK(ba == std::strong_ordering::greater);
            for (size_t k = 0; k < pool.size(); ++k) {
                if (ord(pool[i], pool[j]) != std::strong_ordering::greater &&
                    ord(pool[j], pool[k]) != std::strong_ordering::greater)
                    CHECK(ord(pool[i], pool[k]) != std::strong_ordering::greater);
            }
        }
    }

    // Order agrees with double approximations when those are well separated.
    for (const AlgebraicReal& a : pool)
        for (const AlgebraicReal& b : pool) {
            double da = a.to_double(), db = b.to_double();
            if (std::abs(da - db) > 1e-6) CHECK(((a <=> b) < 0) == (da < db));
        }
}
