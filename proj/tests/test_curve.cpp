#include <catch2/catch_amalgamated.hpp>

#include <witt/curve_residues.hpp>
#include <witt/points.hpp>
#include <witt/ratfunc.hpp>
#include <witt/rings.hpp>
#include <witt/witt.hpp>

#include "test_util.hpp"

using namespace witt;

namespace {

BigRat rat_binom(long top, long bot) {
    if (bot < 0 || top < 0 || bot > top) return BigRat(0);
    BigRat acc(1);
    for (long k = 0; k < bot; ++k) {
        acc *= BigRat(top - k);
        acc /= BigRat(k + 1);
    }
    return acc;
}

} // namespace

TEST_CASE("local expansion of simple pole, quadratic point, and infinity") {
    RationalRing q;
    const RatFuncRing<RationalRing> RF(q, "x");

    SECTION("1/(x-5) at the point x = 5 is exactly 1/t") {
        const auto P = finite_point(q, Poly<RationalRing>{BigRat(-5), BigRat(1)});
        const auto kp = residue_field(q, P);
        const LaurentRing<FreeAlgebraRing<RationalRing>> lt(kp, "t");
        const auto f = RF.make(poly_const(q, BigRat(1)), Poly<RationalRing>{BigRat(-5), BigRat(1)});
        const auto win = laurent_expand(q, kp, lt, f, P, 3);
        REQUIRE(lt.eq(win, lt.monomial(kp.one(), -1)));
        REQUIRE(win.prec >= kInfPrec);
    }

    SECTION("1/(x^2+1) at the quadratic point (x^2+1)") {
        const auto P = finite_point(q, Poly<RationalRing>{BigRat(1), BigRat(0), BigRat(1)});
        REQUIRE(P.degree() == 2);
        const auto kp = residue_field(q, P);
        const LaurentRing<FreeAlgebraRing<RationalRing>> lt(kp, "t");
        const auto f =
            RF.make(poly_const(q, BigRat(1)), Poly<RationalRing>{BigRat(1), BigRat(0), BigRat(1)});
        const auto win = laurent_expand(q, kp, lt, f, P, 2);
        // With ybar the class of x: -(ybar/2) t^-1 + 1/4 + (ybar/8) t + ...
        auto cv = [&](const BigRat& c0, const BigRat& c1) {
            typename FreeAlgebraRing<RationalRing>::Elem e(2);
            e[0] = c0;
            e[1] = c1;
            return e;
        };
        REQUIRE(kp.eq(lt.coeff_at(win, -1), cv(BigRat(0), BigRat(-1, 2))));
        REQUIRE(kp.eq(lt.coeff_at(win, 0), cv(BigRat(1, 4), BigRat(0))));
        REQUIRE(kp.eq(lt.coeff_at(win, 1), cv(BigRat(0), BigRat(1, 8))));
    }

    SECTION("x at infinity is exactly 1/t") {
        const auto P = point_at_infinity<RationalRing>();
        const auto kp = residue_field(q, P);
        const LaurentRing<FreeAlgebraRing<RationalRing>> lt(kp, "t");
        const auto win = laurent_expand(q, kp, lt, RF.gen(), P, 3);
        REQUIRE(lt.eq(win, lt.monomial(kp.one(), -1)));
    }
}

TEST_CASE("support of a form collects pole factors and infinity") {
    RationalRing q;
    const RatFuncRing<RationalRing> RF(q, "x");
    const TruncationSet S = truncation_upto(2);
    const Poly<RationalRing> lin{BigRat(-1), BigRat(1)};        // x - 1
    const Poly<RationalRing> quad{BigRat(1), BigRat(0), BigRat(1)}; // x^2 + 1

    auto w = make_rat_form<RationalRing>(S);
    const auto a = teichmuller(RF, S, RF.make(poly_const(q, BigRat(1)), poly_mul(q, lin, quad)));
    const auto b = teichmuller(RF, S, RF.gen());
    rat_form_add_term(w, a, b);

    const auto pts = support_points(q, w);
    bool has_lin = false, has_quad = false, has_inf = false;
    for (const auto& P : pts) {
        if (P.at_infinity) has_inf = true;
        else if (poly_eq(q, P.pi, lin)) has_lin = true;
        else if (poly_eq(q, P.pi, quad)) has_quad = true;
    }
    REQUIRE(has_lin);
    REQUIRE(has_quad);
    REQUIRE(has_inf);
}

TEST_CASE("logarithmic form has residue one at the origin and minus one at infinity") {
    RationalRing q;
    const RatFuncRing<RationalRing> RF(q, "x");
    const TruncationSet S = truncation_upto(4);

    auto w = make_rat_form<RationalRing>(S);
    const auto inv_x = RF.make(poly_const(q, BigRat(1)), poly_monomial(q, BigRat(1), 1));
    rat_form_add_term(w, teichmuller(RF, S, inv_x), teichmuller(RF, S, RF.gen()));

    const auto origin = finite_point(q, Poly<RationalRing>{BigRat(0), BigRat(1)});
    REQUIRE(witt_eq(q, local_residue(q, w, origin), witt_one(q, S)));
    REQUIRE(witt_eq(q, local_residue(q, w, point_at_infinity<RationalRing>()),
                    witt_neg(q, witt_one(q, S))));
    // A point away from the support contributes nothing.
    const auto elsewhere = finite_point(q, Poly<RationalRing>{BigRat(-7), BigRat(1)});
    REQUIRE(witt_eq(q, local_residue(q, w, elsewhere), witt_zero(q, S)));
}

TEST_CASE("ghost components of a split-pole residue follow the binomial closed form") {
    RationalRing q;
    const RatFuncRing<RationalRing> RF(q, "x");
    const TruncationSet S = truncation_upto(6);
    const BigRat a(3), b(2), c(2);

    for (std::uint64_t n : {std::uint64_t(1), std::uint64_t(2), std::uint64_t(3)}) {
        for (std::uint64_t m : {std::uint64_t(1), std::uint64_t(2), std::uint64_t(3)}) {
            for (long r = 1; r <= 2; ++r) {
                for (long i = 1; i <= 2; ++i) {
                    // w = V_n([a/(x-c)^r]) d V_m([b x^i])
                    Poly<RationalRing> pole{q.neg(c), BigRat(1)};
                    Poly<RationalRing> pr = poly_const(q, BigRat(1));
                    for (long k = 0; k < r; ++k) pr = poly_mul(q, pr, pole);
                    const auto fa = RF.make(poly_const(q, a), pr);
                    const auto fb = RF.from_poly(poly_monomial(q, b, static_cast<std::size_t>(i)));

                    auto w = make_rat_form<RationalRing>(S);
                    rat_form_add_term(
                        w, verschiebung(RF, n, teichmuller(RF, quotient(S, n), fa), S),
                        verschiebung(RF, m, teichmuller(RF, quotient(S, m), fb), S));

                    const auto res = local_residue(q, w, finite_point(q, pole));
                    const auto res_inf = local_residue(q, w, point_at_infinity<RationalRing>());
                    for (auto s : S.elements()) {
                        BigRat want(0);
                        if (s % n == 0 && s % m == 0) {
                            const long sn = static_cast<long>(s / n);
                            const long sm = static_cast<long>(s / m);
                            if (r * sn <= i * sm) {
                                want = BigRat(static_cast<long>(n)) *
                                       BigRat(i) * rat_binom(i * sm - 1, r * sn - 1) *
                                       ring_pow(q, a, static_cast<std::uint64_t>(sn)) *
                                       ring_pow(q, b, static_cast<std::uint64_t>(sm)) *
                                       ring_pow(q, c, static_cast<std::uint64_t>(i * sm - r * sn));
                            }
                        }
                        REQUIRE(q.eq(ghost_component(q, res, s), want));
                        REQUIRE(q.eq(ghost_component(q, res_inf, s), q.neg(want)));
                    }
                }
            }
        }
    }
}

TEST_CASE("residues on the projective line sum to zero for fixed forms") {
    const TruncationSet S = truncation_upto(4);

    SECTION("over the rationals, including a quadratic support point") {
        RationalRing q;
        const RatFuncRing<RationalRing> RF(q, "x");
        auto w = make_rat_form<RationalRing>(S);
        const Poly<RationalRing> quad{BigRat(1), BigRat(0), BigRat(1)};
        const auto f1 = RF.make(Poly<RationalRing>{BigRat(2), BigRat(1)}, quad);
        rat_form_add_term(w, teichmuller(RF, S, f1), teichmuller(RF, S, RF.gen()));
        const auto f2 = RF.make(poly_const(q, BigRat(1)),
                                Poly<RationalRing>{BigRat(-1), BigRat(1)});
        rat_form_add_term(w, verschiebung(RF, 2, teichmuller(RF, quotient(S, 2), f2), S),
                          teichmuller(RF, S, RF.from_poly(Poly<RationalRing>{BigRat(0), BigRat(0),
                                                                             BigRat(1)})));
        REQUIRE(verify_residue_theorem(q, w));
    }

    SECTION("over a prime field of odd characteristic") {
        PrimeFieldRing f5(BigInt(5));
        const RatFuncRing<PrimeFieldRing> RF(f5, "x");
        auto w = make_rat_form<PrimeFieldRing>(S);
        auto fp = [&](long v) { return f5.from_integer(BigInt(v)); };
        const auto g1 = RF.make(poly_const(f5, fp(3)),
                                Poly<PrimeFieldRing>{fp(3), fp(1), fp(1)});
        rat_form_add_term(w, teichmuller(RF, S, g1),
                          teichmuller(RF, S, RF.from_poly(Poly<PrimeFieldRing>{fp(1), fp(2)})));
        const auto g2 = RF.make(Poly<PrimeFieldRing>{fp(0), fp(1)},
                                Poly<PrimeFieldRing>{fp(4), fp(1)});
        rat_form_add_term(w, verschiebung(RF, 2, teichmuller(RF, quotient(S, 2), g2), S),
                          teichmuller(RF, S, g2));
        REQUIRE(verify_residue_theorem(f5, w));
    }
}
