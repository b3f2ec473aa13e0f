#include <catch2/catch_amalgamated.hpp>

#include <witt/one_unit.hpp>
#include <witt/poly.hpp>
#include <witt/rings.hpp>
#include <witt/witt.hpp>

#include "test_util.hpp"

using namespace witt;
using wtest::wv;

TEST_CASE("series model round-trips Witt vectors") {
    RationalRing q;
    const TruncationSet S = truncation_upto(6);
    const auto w = wv(q, S, {2, -1, 3, 0, 1, -2});
    REQUIRE(witt_eq(q, from_one_unit(q, to_one_unit(q, w)), w));
    REQUIRE(witt_eq(q, witt_from_series(q, S, expand_one_unit(q, to_one_unit(q, w))), w));
}

TEST_CASE("series multiplication realizes Witt addition") {
    IntegerRing z;
    const TruncationSet S = make_truncation({1, 2, 4});
    const auto a = wv(z, S, {3, -2, 1});
    const auto b = wv(z, S, {-1, 4, 2});
    REQUIRE(witt_eq(z, from_one_unit(z, one_unit_mul(z, to_one_unit(z, a), to_one_unit(z, b))),
                    witt_add(z, a, b)));
}

TEST_CASE("a Teichmueller lift expands to a single linear factor") {
    RationalRing q;
    const TruncationSet S = truncation_upto(5);
    const BigRat a(7, 3);
    const Poly<RationalRing> got = expand_one_unit(q, to_one_unit(q, teichmuller(q, S, a)));
    const Poly<RationalRing> want =
        poly_sub(q, poly_const(q, q.one()), poly_monomial(q, a, 1)); // 1 - a T
    REQUIRE(poly_eq(q, got, want));
}

TEST_CASE("peeling rejects series whose constant term is not one") {
    RationalRing q;
    const TruncationSet S = truncation_upto(3);
    REQUIRE_THROWS_AS(one_unit_from_series(q, S, poly_const(q, BigRat(2))), domain_error);
    REQUIRE_THROWS_AS(one_unit_from_series(q, S, Poly<RationalRing>{}), domain_error);
}

TEST_CASE("coordinates of the lift of 1+x over integer polynomials") {
    // [1+x] - [1] strips as a sum of shifted lifts of x*f_n with f_n an
    // integer polynomial; the first three are pinned.
    IntegerRing z;
    const PolyRing<IntegerRing> zx(z, "x");
    const TruncationSet S = truncation_upto(6);
    const Poly<IntegerRing> one_plus_x{BigInt(1), BigInt(1)};

    auto diff = witt_sub(zx, teichmuller(zx, S, one_plus_x), witt_one(zx, S));
    std::vector<Poly<IntegerRing>> fs;
    for (auto n : S.elements()) {
        const Poly<IntegerRing> c = witt_component(diff, n);
        // Divisibility by x: no constant term.
        REQUIRE((c.empty() || z.is_zero(c[0])));
        Poly<IntegerRing> fn;
        if (!c.empty()) fn.assign(c.begin() + 1, c.end());
        fs.push_back(fn);
        diff = witt_sub(zx, diff,
                        verschiebung(zx, n, teichmuller(zx, quotient(S, n), c), S));
    }
    REQUIRE(witt_eq(zx, diff, witt_zero(zx, S)));

    const Poly<IntegerRing> one{BigInt(1)};
    const Poly<IntegerRing> onepx{BigInt(1), BigInt(1)};
    REQUIRE(poly_eq(z, fs[0], one));   // f_1 = 1
    REQUIRE(poly_eq(z, fs[1], one));   // f_2 = 1
    REQUIRE(poly_eq(z, fs[2], onepx)); // f_3 = 1 + x

    SECTION("the emitted coordinates rebuild the lift") {
        auto acc = witt_one(zx, S);
        for (std::size_t i = 0; i < S.elements().size(); ++i) {
            const std::uint64_t n = S.elements()[i];
            Poly<IntegerRing> xfn = poly_mul(z, Poly<IntegerRing>{BigInt(0), BigInt(1)}, fs[i]);
            acc = witt_add(zx, acc,
                           verschiebung(zx, n, teichmuller(zx, quotient(S, n), xfn), S));
        }
        REQUIRE(witt_eq(zx, acc, teichmuller(zx, S, one_plus_x)));
    }
}

TEST_CASE("series round-trip over a torsion ring") {
    ModRing z6(BigInt(6));
    const TruncationSet S = truncation_upto(6);
    const auto w = wv(z6, S, {5, 2, 3, 1, 4, 0});
    REQUIRE(witt_eq(z6, from_one_unit(z6, to_one_unit(z6, w)), w));
}
