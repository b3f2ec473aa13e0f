#include <catch2/catch_amalgamated.hpp>

#include <witt/curve_residues.hpp>
#include <witt/free_algebra.hpp>
#include <witt/laurent.hpp>
#include <witt/rings.hpp>
#include <witt/trace.hpp>
#include <witt/witt.hpp>

#include "test_util.hpp"

using namespace witt;

namespace {
using FA = FreeAlgebraRing<RationalRing>;
} // namespace

TEST_CASE("Laurent trace of monomial lifts over a trivial algebra") {
    // B = Q (presented with rank one), so the trace is just the one of
    // Q((t)) over Q((z)) with z = t^e: ghost slot s of Tr([t^i]) is the
    // classical trace of t^(i*s), which is e * z^(i*s/e) when e divides i*s
    // and zero otherwise.
    RationalRing q;
    const FA B1(q, Poly<RationalRing>{BigRat(0), BigRat(1)}, "y");
    REQUIRE(B1.rank() == 1);
    const LaurentRing<FA> LB(B1, "t");
    const LaurentRing<RationalRing> LZ(q, "z");
    const TruncationSet S = truncation_upto(4);
    const std::uint64_t e = 2;

    for (long i : {-2L, -1L, 1L, 2L}) {
        const auto w = teichmuller(LB, S, LB.monomial(B1.one(), i));
        const auto tr = trace_witt_laurent(B1, e, w, "z");
        for (auto s : S.elements()) {
            const long is = i * static_cast<long>(s);
            const auto want = (is % static_cast<long>(e) == 0)
                                  ? LZ.monomial(q.from_integer(BigInt(static_cast<long>(e))),
                                                is / static_cast<long>(e))
                                  : LZ.zero();
            REQUIRE(LZ.eq(ghost_component(LZ, tr, s), want));
        }
    }
}

TEST_CASE("trace and residue can be exchanged, with pinned ghost values") {
    RationalRing q;
    const FA B(q, Poly<RationalRing>{BigRat(-2), BigRat(0), BigRat(1)}, "y"); // y^2 = 2
    const LaurentRing<FA> LB(B, "t");
    const LaurentRing<RationalRing> LZ(q, "z");
    const TruncationSet S = truncation_upto(4);
    const std::uint64_t e = 2;

    // b = V_2([(1+y) t^-4]) over B((t)), a = [3 z] over Q((z)).
    typename FA::Elem u = B.one();
    u[1] = BigRat(1); // 1 + y
    const auto b =
        verschiebung(LB, 2, teichmuller(LB, quotient(S, 2), LB.monomial(u, -4)), S);
    const auto a = teichmuller(LZ, S, LZ.monomial(BigRat(3), 1));

    const auto ex = trace_residue_exchange(B, e, b, a);
    REQUIRE(witt_eq(q, ex.first, ex.second));

    // Ghost slot s of either side: n*e*i * Tr(u^(s/n)) * v^s with n = 2,
    // i = 1, v = 3, nonzero only when n | s. Tr(1+y) = 2, Tr((1+y)^2) = 6.
    for (auto s : S.elements()) {
        BigRat want(0);
        if (s % 2 == 0) {
            const auto us = ring_pow(B, u, s / 2);
            want = BigRat(2) * BigRat(static_cast<long>(e)) * B.trace_elem(us) *
                   ring_pow(q, BigRat(3), s);
        }
        REQUIRE(q.eq(ghost_component(q, ex.first, s), want));
    }
    REQUIRE(q.eq(ghost_component(q, ex.first, 2), BigRat(72)));
    REQUIRE(q.eq(ghost_component(q, ex.first, 4), BigRat(1944)));
}

TEST_CASE("exchange holds for a two-term mixed pair") {
    RationalRing q;
    const FA B(q, Poly<RationalRing>{BigRat(-2), BigRat(0), BigRat(1)}, "y");
    const LaurentRing<FA> LB(B, "t");
    const LaurentRing<RationalRing> LZ(q, "z");
    const TruncationSet S = truncation_upto(4);

    typename FA::Elem u = B.zero();
    u[1] = BigRat(1); // y
    auto b = witt_add(LB, teichmuller(LB, S, LB.monomial(u, -2)),
                      verschiebung(LB, 2, teichmuller(LB, quotient(S, 2), LB.monomial(B.one(), 3)),
                                   S));
    auto a = witt_add(LZ, teichmuller(LZ, S, LZ.monomial(BigRat(1), 1)),
                      verschiebung(LZ, 2,
                                   teichmuller(LZ, quotient(S, 2), LZ.monomial(BigRat(-1), -1)),
                                   S));

    const auto ex = trace_residue_exchange(B, 2, b, a);
    REQUIRE(witt_eq(q, ex.first, ex.second));
    REQUIRE(!witt_eq(q, ex.first, witt_zero(q, S)));
}
