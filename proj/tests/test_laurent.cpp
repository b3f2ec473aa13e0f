#include <catch2/catch_amalgamated.hpp>

#include <witt/laurent.hpp>
#include <witt/rings.hpp>
#include <witt/witt.hpp>
#include <witt/witt_laurent.hpp>

using namespace witt;

namespace {
const RationalRing Q;
const LaurentRing<RationalRing> LR(Q, "t");

LaurentWindow<BigRat> win(long lo, std::initializer_list<long long> cs, long prec = kInfPrec) {
    std::vector<BigRat> v;
    for (long long c : cs) v.emplace_back(c);
    return LR.make(lo, std::move(v), prec);
}
} // namespace

TEST_CASE("windows canonicalize: zero ends trimmed, empty normalized") {
    const auto a = win(-2, {0, 3, 0, 1, 0});
    REQUIRE(a.lo == -1);
    REQUIRE(a.coeffs.size() == 3);
    const auto z = win(5, {0, 0});
    REQUIRE(z.lo == 0);
    REQUIRE(z.coeffs.empty());
    REQUIRE(LR.is_zero(z));
}

TEST_CASE("arithmetic on exact windows stays exact") {
    const auto a = win(-1, {1, 2});      // t^-1 + 2
    const auto b = win(0, {3, 0, 1});    // 3 + t^2
    const auto s = LR.add(a, b);
    REQUIRE(s.prec >= kInfPrec);
    REQUIRE(LR.coeff_at(s, -1) == BigRat(1));
    REQUIRE(LR.coeff_at(s, 0) == BigRat(5));
    REQUIRE(LR.coeff_at(s, 2) == BigRat(1));
    const auto p = LR.mul(a, b);
    REQUIRE(p.prec >= kInfPrec);
    REQUIRE(LR.coeff_at(p, -1) == BigRat(3)); // 3*t^-1
    REQUIRE(LR.coeff_at(p, 1) == BigRat(1));  // t^-1 * t^2
    REQUIRE(LR.coeff_at(p, 2) == BigRat(2));  // 2 * t^2
}

TEST_CASE("multiplication precision accounts for the pole of the other factor") {
    const auto a = win(-2, {1}, 5);  // t^-2 + O(t^5)
    const auto b = win(-3, {2}, 4);  // 2 t^-3 + O(t^4)
    const auto p = LR.mul(a, b);
    // Bounds: prec(a) + lo(b) = 2, prec(b) + lo(a) = 2.
    REQUIRE(p.prec == 2);
    REQUIRE(LR.coeff_at(p, -5) == BigRat(2));
}

TEST_CASE("coefficient reads beyond the stated precision throw") {
    const auto a = win(0, {1, 1}, 3);
    REQUIRE(LR.coeff_at(a, 2) == BigRat(0));
    REQUIRE_THROWS_AS(LR.coeff_at(a, 3), insufficient_precision);
}

TEST_CASE("derivative, shift, inflate, and class extraction") {
    const auto a = win(-2, {3, 0, 0, 5}); // 3t^-2 + 5t
    const auto d = LR.derivative(a);
    REQUIRE(LR.coeff_at(d, -3) == BigRat(-6));
    REQUIRE(LR.coeff_at(d, 0) == BigRat(5));

    const auto sh = LR.shift(a, 4);
    REQUIRE(LR.coeff_at(sh, 2) == BigRat(3));

    const auto in = LR.inflate(win(-1, {1, 2}), 3); // t^-1 + 2 -> t^-3 + 2
    REQUIRE(LR.coeff_at(in, -3) == BigRat(1));
    REQUIRE(LR.coeff_at(in, 0) == BigRat(2));
    REQUIRE(LR.coeff_at(in, -1) == BigRat(0));

    // a = sum_b t^b g_b(t^e): extract both classes for e=2 of t^-1 + 3 + 7t.
    const auto f = win(-1, {1, 3, 7});
    const auto g0 = LR.class_part(f, 2, 0); // even part, in the same variable: 3
    const auto g1 = LR.class_part(f, 2, 1); // odd part: t^-1 + 7t -> g(u) = u^-1 + 7
    REQUIRE(LR.coeff_at(g0, 0) == BigRat(3));
    REQUIRE(LR.coeff_at(g1, -1) == BigRat(1));
    REQUIRE(LR.coeff_at(g1, 0) == BigRat(7));
}

TEST_CASE("series inversion to a stated precision") {
    const auto one_minus_t = win(0, {1, -1});
    const auto inv = LR.invert(one_minus_t, 5);
    for (long k = 0; k < 5; ++k) REQUIRE(LR.coeff_at(inv, k) == BigRat(1));
    REQUIRE(inv.prec == 5);
    REQUIRE(LR.eq(LR.truncate(LR.mul(one_minus_t, inv), 5), LR.truncate(LR.one(), 5)));

    SECTION("exact monomials invert exactly") {
        const auto m = LR.inv(win(3, {2}));
        REQUIRE(LR.coeff_at(m, -3) == BigRat(1, 2));
        REQUIRE(m.prec >= kInfPrec);
    }
    SECTION("general exact series still need a stated precision") {
        REQUIRE_THROWS_AS(LR.inv(one_minus_t), not_invertible);
    }
}

TEST_CASE("canonical decomposition of a two-slot vector") {
    const TruncationSet S = make_truncation({2});
    auto w = witt_zero(LR, S);
    w.comp[0] = win(1, {1}); // t
    w.comp[1] = win(2, {1}); // t^2
    const auto dec = decompose_laurent(LR, w, 8);
    REQUIRE(dec.rows.size() == 2);
    REQUIRE(dec.rows[0].first == 1);
    REQUIRE(dec.rows[0].second.size() == 1);
    REQUIRE(dec.rows[0].second[0].j == 1);
    REQUIRE(dec.rows[0].second[0].a == BigRat(1));
    REQUIRE(dec.rows[1].first == 2);
    REQUIRE(dec.rows[1].second.size() == 1);
    REQUIRE(dec.rows[1].second[0].j == 2);
    REQUIRE(dec.rows[1].second[0].a == BigRat(1));
}

TEST_CASE("decomposition of exact windows with poles neither throws nor drifts") {
    // Exact inputs must stay exact through every strip round; reassembling
    // the emitted rows must reproduce the vector in all degrees up to the cut.
    const TruncationSet S = truncation_upto(4);
    const long D = 12;
    auto w = witt_zero(LR, S);
    w.comp[0] = win(-2, {1, 0, 0, 3});  // t^-2 + 3t
    w.comp[1] = win(-1, {2, -1});       // 2t^-1 - 1
    w.comp[3] = win(0, {5});            // 5
    const auto dec = decompose_laurent(LR, w, D);

    auto re = witt_zero(LR, S);
    for (const auto& [n, terms] : dec.rows) {
        const TruncationSet Sq = quotient(S, n);
        auto u = witt_zero(LR, Sq);
        for (const auto& tm : terms)
            u = witt_add(LR, u, teichmuller(LR, Sq, LR.monomial(tm.a, tm.j)));
        re = witt_add(LR, re, verschiebung(LR, n, u, S));
    }
    for (std::size_t i = 0; i < w.comp.size(); ++i) {
        REQUIRE(re.comp[i].prec >= kInfPrec); // exactness preserved
        REQUIRE(LR.eq(LR.truncate(w.comp[i], D + 1), LR.truncate(re.comp[i], D + 1)));
    }
}

TEST_CASE("decomposition demands precision past the degree cut") {
    const TruncationSet S = make_truncation({2});
    auto w = witt_zero(LR, S);
    w.comp[0] = win(-1, {1}, 3); // t^-1 + O(t^3)
    w.comp[1] = win(0, {}, kInfPrec);
    // Reading the input window past degree 3 is impossible.
    REQUIRE_THROWS_AS(decompose_laurent(LR, w, 3), insufficient_precision);
    // Stripping the t^-1 term leaves slot 2 known only to O(t^2) (the pole
    // eats one order), so a cut at degree 2 is also unreachable.
    REQUIRE_THROWS_AS(decompose_laurent(LR, w, 2), insufficient_precision);
    const auto dec = decompose_laurent(LR, w, 1);
    REQUIRE(dec.rows.size() == 1);
    REQUIRE(dec.rows[0].first == 1);
    REQUIRE(dec.rows[0].second.size() == 1);
    REQUIRE(dec.rows[0].second[0].j == -1);
}

TEST_CASE("pole order scan") {
    const TruncationSet S = make_truncation({2});
    auto w = witt_zero(LR, S);
    REQUIRE(max_pole_order(LR, w) == 0);
    w.comp[1] = win(-3, {1, 1});
    REQUIRE(max_pole_order(LR, w) == 3);
    w.comp[0] = win(2, {4});
    REQUIRE(max_pole_order(LR, w) == 3);
}
