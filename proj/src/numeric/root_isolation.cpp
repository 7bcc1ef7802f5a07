#include "mms/numeric/root_isolation.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace mms {

namespace {

// Descartes bound on the number of roots of q in the open interval (0,1):
// sign variations of (1+x)^deg * q(1/(1+x)).  Roots at 0 or 1 drop out of the
// transform and are never counted.
int var01(const IntPolynomial& q) { return q.reversed().taylor_shift_1().sign_variations(); }

// True iff sf has a root in the open interval (a, b), given at most one root
// there.  Roots at the endpoints drop out of the Descartes transform, so the
// parity of the bound decides exactly under that cap.
bool root_in_open(const IntPolynomial& sf, const Rational& a, const Rational& b) {
    Rational w = b - a;
    // Coefficients of sf(a + w*x) via Horner over rational polynomials.
    std::vector<Rational> acc;
    for (int i = sf.degree(); i >= 0; --i) {
        // acc = acc * (a + w*x) + c_i
        std::vector<Rational> next(acc.size() + 1);
        for (size_t j = 0; j < acc.size(); ++j) {
            next[j] += acc[j] * a;
            next[j + 1] += acc[j] * w;
        }
        if (next.empty()) next.resize(1);
        next[0] += Rational(sf.coeff(i));
        acc = std::move(next);
    }
    return var01(IntPolynomial::from_rationals(acc)) % 2 == 1;
}

struct Isolator {
    const IntPolynomial& sf;  // square-free target, original frame
    Rational mult;            // frame map t = mult * x, x in (0,1)
    std::vector<AlgebraicReal>& out;

    void emit_point(const Rational& x) { out.emplace_back(mult * x); }

    // Exactly one root of sf lies in the open original-frame interval; the
    // endpoints may themselves be (already emitted) rational roots, in which
    // case the interval is shrunk off them first.
    void emit_interval(const Rational& xlo, const Rational& xhi) {
        Rational a = mult * xlo, b = mult * xhi;
        if (b < a) std::swap(a, b);
        int sa = sf.sign_at(a), sb = sf.sign_at(b);
        while (sa == 0 && sb == 0) {
            Rational m = midpoint(a, b);
            int s = sf.sign_at(m);
            if (s == 0) {
                out.emplace_back(std::move(m));
                return;
            }
            if (root_in_open(sf, a, m)) {
                b = std::move(m);
                sb = s;
            } else {
                a = std::move(m);
                sa = s;
            }
        }
        if (sa == 0) {
            // Step in from a until the sign differs from sb; candidates left
            // of the root have the opposite sign, so this is unambiguous.
            Rational step = b - a;
            for (;;) {
                step /= Rational(2);
                Rational cand = a + step;
                int s = sf.sign_at(cand);
                if (s == 0) {
                    out.emplace_back(std::move(cand));
                    return;
                }
                if (s != sb) {
                    a = std::move(cand);
                    break;
                }
            }
        } else if (sb == 0) {
            Rational step = b - a;
            for (;;) {
                step /= Rational(2);
                Rational cand = b - step;
                int s = sf.sign_at(cand);
                if (s == 0) {
                    out.emplace_back(std::move(cand));
                    return;
                }
                if (s != sa) {
                    b = std::move(cand);
                    break;
                }
            }
        }
        out.emplace_back(AlgebraicReal(sf, std::move(a), std::move(b)));
    }

    // q's roots in (0,1) are sf's roots in the mapped (xlo, xhi).
    void iso01(const IntPolynomial& q, const Rational& xlo, const Rational& xhi, int depth) {
        int v = var01(q);
        if (v == 0) return;
        if (v == 1) {
            emit_interval(xlo, xhi);
            return;
        }
        if (depth > 4000) throw std::runtime_error("root isolation: subdivision depth exceeded");
        Rational m = midpoint(xlo, xhi);
        IntPolynomial ql = q.half_scale();  // roots in (0,1/2) -> (0,1)
        if (ql.eval(BigInt(1)).is_zero()) emit_point(m);
        IntPolynomial qr = ql.taylor_shift_1();  // roots in (1/2,1) -> (0,1)
        iso01(ql, xlo, m, depth + 1);
        iso01(qr, m, xhi, depth + 1);
    }
};

// Power-of-two bound B with all real roots of p strictly inside (-B, B).
BigInt cauchy_bound_pow2(const IntPolynomial& p, unsigned& k_out) {
    BigInt maxc = 0;
    for (int i = 0; i < p.degree(); ++i) maxc = std::max(maxc, abs_of(p.coeff(i)));
    BigInt lead = abs_of(p.leading());
    BigInt m = 1 + (maxc + lead - 1) / lead;  // >= 1 + maxc/lead > any |root|
    k_out = ceil_log2(m);
    return BigInt(1) << k_out;
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    std::vector<IsolatedRoot> res;
    if (p.is_constant()) return res;

    IntPolynomial sf = square_free_part(p);
    bool zero_root = sf.coeff(0).is_zero();
    IntPolynomial stripped = sf;
    if (zero_root) {
        // The subdivision frames exclude 0, so isolate the x-free cofactor;
        // emit still checks signs against the full square-free part, which
        // nudges interval endpoints off the zero root.
        size_t k = 0;
        while (stripped.coeff(static_cast<int>(k)).is_zero()) ++k;
        std::vector<BigInt> c(stripped.coeffs().begin() + static_cast<long>(k),
                              stripped.coeffs().end());
        stripped = IntPolynomial(std::move(c));
    }

    std::vector<AlgebraicReal> roots;
    if (zero_root) roots.emplace_back(Rational(0));
    if (!stripped.is_constant()) {
        unsigned k = 0;
        BigInt b = cauchy_bound_pow2(stripped, k);
        IntPolynomial pos = stripped.scale_pow2(k);  // stripped(B x)
        std::vector<BigInt> nc = stripped.coeffs();
        for (size_t i = 1; i < nc.size(); i += 2) nc[i] = -nc[i];
        IntPolynomial neg = IntPolynomial(std::move(nc)).scale_pow2(k);  // stripped(-B x)
        Isolator ip{sf, Rational(b), roots};
        ip.iso01(pos, Rational(0), Rational(1), 0);
        Isolator in{sf, Rational(-b), roots};
        in.iso01(neg, Rational(0), Rational(1), 0);
    }

    // Selection sort via the refining comparison: root counts are tiny and
    // std::sort must not mutate its arguments.
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (compare(roots[j], roots[i]) == std::strong_ordering::less)
                std::swap(roots[i], roots[j]);

    bool square_free = sf.degree() == p.degree();
    std::vector<std::pair<IntPolynomial, int>> decomp;
    if (!square_free) decomp = square_free_decomposition(p);
    res.reserve(roots.size());
    for (AlgebraicReal& r : roots) {
        int mult = 1;
        if (!square_free) {
            mult = 0;
            for (const auto& [f, m] : decomp)
                if (sign_at(f, r) == 0) {
                    mult = m;
                    break;
                }
            if (mult == 0) throw std::logic_error("isolate_real_roots: root matches no factor");
        }
        res.push_back({std::move(r), mult});
    }
    return res;
}

std::vector<IsolatedRoot> isolate_real_roots(const IntPolynomial& p, const Rational& lo,
                                             const Rational& hi) {
    std::vector<IsolatedRoot> all = isolate_real_roots(p);
    std::vector<IsolatedRoot> res;
    for (IsolatedRoot& ir : all) {
        if (ir.root.compare_to(lo) == std::strong_ordering::less) continue;
        if (ir.root.compare_to(hi) == std::strong_ordering::greater) continue;
        // compare_to refined the interval to within [lo, hi] already
        res.push_back(std::move(ir));
    }
    return res;
}

}  // namespace mms
