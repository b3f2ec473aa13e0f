#include <catch2/catch_amalgamated.hpp>

#include <witt/free_algebra.hpp>
#include <witt/ratfunc.hpp>
#include <witt/rings.hpp>
#include <witt/trace.hpp>
#include <witt/witt.hpp>

#include "test_util.hpp"

using namespace witt;
using wtest::wv;

namespace {
using FA = FreeAlgebraRing<RationalRing>;

FA quad_sqrt2() {
    RationalRing q;
    return FA(q, Poly<RationalRing>{BigRat(-2), BigRat(0), BigRat(1)}, "y"); // y^2 = 2
}
} // namespace

TEST_CASE("norm of a linear one-unit over a quadratic algebra") {
    // N(1 - yT) over Q[y]/(y^2 - 2) is 1 - 2 T^2.
    RationalRing q;
    const FA B = quad_sqrt2();
    const TruncationSet S = truncation_upto(4);
    const auto u = to_one_unit(B, teichmuller(B, S, B.gen()));
    const Poly<RationalRing> series = expand_one_unit(q, norm_one_unit(B, u));
    const Poly<RationalRing> want{BigRat(1), BigRat(0), BigRat(-2)};
    REQUIRE(poly_eq(q, series, want));
}

TEST_CASE("trace of the generator lift is the shifted norm") {
    RationalRing q;
    const FA B = quad_sqrt2();
    const TruncationSet S = truncation_upto(4);
    const auto tr = trace_witt(B, teichmuller(B, S, B.gen()));
    const auto want = verschiebung(q, 2, teichmuller(q, quotient(S, 2), BigRat(2)), S);
    REQUIRE(witt_eq(q, tr, want));
}

TEST_CASE("ghost components of the trace are matrix traces") {
    RationalRing q;
    const FA B = quad_sqrt2();
    const TruncationSet S = truncation_upto(4);
    // w with entries 1 + y, y, 0, -2.
    auto mk = [&](long c0, long c1) {
        typename FA::Elem e(2);
        e[0] = BigRat(c0);
        e[1] = BigRat(c1);
        return e;
    };
    auto w = witt_zero(B, S);
    w.comp[0] = mk(1, 1);
    w.comp[1] = mk(0, 1);
    w.comp[3] = mk(-2, 0);
    const auto tr = trace_witt(B, w);
    for (auto s : S.elements()) {
        // Classical trace of multiplication by the ghost component.
        const auto g = ghost_component(B, w, s);
        REQUIRE(q.eq(ghost_component(q, tr, s), B.trace_elem(g)));
    }
}

TEST_CASE("trace is additive and linear over the base") {
    RationalRing q;
    const FA B = quad_sqrt2();
    const TruncationSet S = truncation_upto(4);
    auto mk = [&](long c0, long c1) {
        typename FA::Elem e(2);
        e[0] = BigRat(c0);
        e[1] = BigRat(c1);
        return e;
    };
    auto w = witt_zero(B, S);
    w.comp[0] = mk(2, -1);
    w.comp[2] = mk(1, 1);
    auto v = witt_zero(B, S);
    v.comp[0] = mk(-1, 3);
    v.comp[1] = mk(0, 2);
    REQUIRE(witt_eq(q, trace_witt(B, witt_add(B, w, v)),
                    witt_add(q, trace_witt(B, w), trace_witt(B, v))));

    // Scalars from the base pull out: Tr(emb(c) * w) = c * Tr(w).
    const auto c = wv(q, S, {3, -1, 2, 0});
    auto embc = witt_zero(B, S);
    for (std::size_t i = 0; i < c.comp.size(); ++i) embc.comp[i] = B.embed(c.comp[i]);
    REQUIRE(witt_eq(q, trace_witt(B, witt_mul(B, embc, w)),
                    witt_mul(q, c, trace_witt(B, w))));
}

TEST_CASE("trace commutes with shift and twist maps") {
    RationalRing q;
    const FA B = quad_sqrt2();
    const TruncationSet S = truncation_upto(4);
    auto mk = [&](long c0, long c1) {
        typename FA::Elem e(2);
        e[0] = BigRat(c0);
        e[1] = BigRat(c1);
        return e;
    };
    auto x = witt_zero(B, quotient(S, 2));
    x.comp[0] = mk(1, 2);
    x.comp[1] = mk(-1, 0);
    REQUIRE(witt_eq(q, trace_witt(B, verschiebung(B, 2, x, S)),
                    verschiebung(q, 2, trace_witt(B, x), S)));
    auto w = witt_zero(B, S);
    w.comp[0] = mk(0, 1);
    w.comp[1] = mk(2, 1);
    REQUIRE(witt_eq(q, trace_witt(B, frobenius(B, 2, w)),
                    frobenius(q, 2, trace_witt(B, w))));
}

TEST_CASE("trace through a tower matches the direct rank-four trace") {
    RationalRing q;
    // B = Q[y]/(y^2-2), C = B[w]/(w^2-y): the composite is Q[x]/(x^4-2).
    const FA B = quad_sqrt2();
    using FB = FreeAlgebraRing<FA>;
    Poly<FA> pi(3, B.zero());
    pi[0] = B.neg(B.gen());
    pi[2] = B.one();
    const FB C(B, pi, "w");
    const FA C4(q, Poly<RationalRing>{BigRat(-2), BigRat(0), BigRat(0), BigRat(0), BigRat(1)},
                "x");
    const TruncationSet S = truncation_upto(4);

    // One test vector, written in both coordinate systems: entries are
    // polynomials in the tower generator w ~ x with B-coefficients a + b y,
    // y ~ x^2.
    auto cv = [&](long a0, long b0, long a1, long b1) {
        typename FB::Elem e(2);
        typename FA::Elem lo(2), hi(2);
        lo[0] = BigRat(a0);
        lo[1] = BigRat(b0);
        hi[0] = BigRat(a1);
        hi[1] = BigRat(b1);
        e[0] = lo;
        e[1] = hi;
        return e;
    };
    auto c4v = [&](long a0, long b0, long a1, long b1) {
        typename FA::Elem e(4);
        e[0] = BigRat(a0); // 1
        e[1] = BigRat(a1); // x
        e[2] = BigRat(b0); // x^2 ~ y
        e[3] = BigRat(b1); // x^3 ~ x y
        return e;
    };
    auto wt = witt_zero(C, S);
    wt.comp[0] = cv(1, 2, 0, -1);
    wt.comp[1] = cv(0, 1, 1, 0);
    wt.comp[3] = cv(-2, 0, 0, 3);
    auto w4 = witt_zero(C4, S);
    w4.comp[0] = c4v(1, 2, 0, -1);
    w4.comp[1] = c4v(0, 1, 1, 0);
    w4.comp[3] = c4v(-2, 0, 0, 3);

    REQUIRE(witt_eq(q, trace_witt(B, trace_witt(C, wt)), trace_witt(C4, w4)));
}

TEST_CASE("trace over an inseparable cubic extension") {
    // A = F3(v), B = A[y]/(y^3 - v): Tr(V_n([y^j])) = V_{3n}([v^j]).
    PrimeFieldRing f3(BigInt(3));
    const RatFuncRing<PrimeFieldRing> A(f3, "v");
    using FI = FreeAlgebraRing<RatFuncRing<PrimeFieldRing>>;
    Poly<RatFuncRing<PrimeFieldRing>> pi(4, A.zero());
    pi[0] = A.neg(A.gen()); // -v
    pi[3] = A.one();
    const FI B(A, pi, "y");
    const TruncationSet S = truncation_upto(12);

    for (std::uint64_t n : {std::uint64_t(1), std::uint64_t(2), std::uint64_t(4)}) {
        for (unsigned j = 1; j <= 3; ++j) {
            const auto yj = ring_pow(B, B.gen(), j);
            const auto arg =
                verschiebung(B, n, teichmuller(B, quotient(S, n), yj), S);
            const auto vj = ring_pow(A, A.gen(), j);
            const auto want =
                verschiebung(A, 3 * n, teichmuller(A, quotient(S, 3 * n), vj), S);
            REQUIRE(witt_eq(A, trace_witt(B, arg), want));
        }
    }
}
