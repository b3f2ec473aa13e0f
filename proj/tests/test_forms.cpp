#include <catch2/catch_amalgamated.hpp>

#include <witt/forms.hpp>
#include <witt/laurent.hpp>
#include <witt/rings.hpp>
#include <witt/witt.hpp>

using namespace witt;

namespace {
const RationalRing Q;
const LaurentRing<RationalRing> LR(Q, "t");
const TruncationSet S6 = truncation_upto(6);

WittVector<LaurentRing<RationalRing>> shifted_lift(std::uint64_t n, const BigRat& a, long j,
                                                   const TruncationSet& S) {
    return verschiebung(LR, n, teichmuller(LR, quotient(S, n), LR.monomial(a, j)), S);
}
} // namespace

TEST_CASE("log-derivative pairing of a unit lift against the inverse parameter") {
    // Res([u t] d [t^-1]) = -[u].
    const BigRat u(5, 3);
    const auto alpha = shifted_lift(1, u, 1, S6);
    const auto beta = shifted_lift(1, BigRat(1), -1, S6);
    REQUIRE(witt_eq(Q, residue_pair(LR, alpha, beta), witt_neg(Q, teichmuller(Q, S6, u))));
}

TEST_CASE("pinned pairing with shifts two and three") {
    // Res(V2([2 t^2]) d V3([3 t^-3])) = -V6([2^3 * 3^2]).
    const auto alpha = shifted_lift(2, BigRat(2), 2, S6);
    const auto beta = shifted_lift(3, BigRat(3), -3, S6);
    const auto want = witt_neg(
        Q, verschiebung(Q, 6, teichmuller(Q, quotient(S6, 6), BigRat(72)), S6));
    REQUIRE(witt_eq(Q, residue_pair(LR, alpha, beta), want));
}

TEST_CASE("pairing vanishes without an exponent match") {
    const auto alpha = shifted_lift(1, BigRat(4), 2, S6);
    const auto beta = shifted_lift(2, BigRat(3), 3, S6); // 1*3 + 2*2 != 0 and 2*2+1*3 != 0
    REQUIRE(witt_eq(Q, residue_pair(LR, alpha, beta), witt_zero(Q, S6)));
}

TEST_CASE("regular forms have zero residue") {
    auto form = make_form<RationalRing>(S6);
    auto a = witt_zero(LR, S6);
    a.comp[0] = LR.make(0, {BigRat(2), BigRat(1)}); // 2 + t
    a.comp[2] = LR.make(1, {BigRat(5)});            // 5t
    auto b = witt_zero(LR, S6);
    b.comp[0] = LR.make(0, {BigRat(1), BigRat(0), BigRat(3)}); // 1 + 3t^2
    form_add_term(form, a, b);
    REQUIRE(witt_eq(Q, residue_form(LR, form), witt_zero(Q, S6)));
}

TEST_CASE("ghost components of residues match classical residues of ghost forms") {
    auto form = make_form<RationalRing>(S6);
    form_add_term(form, shifted_lift(2, BigRat(2), 2, S6), shifted_lift(3, BigRat(3), -3, S6));
    auto a2 = witt_zero(LR, S6);
    a2.comp[0] = LR.make(-1, {BigRat(1), BigRat(2)});
    a2.comp[1] = LR.make(-2, {BigRat(3)});
    auto b2 = witt_zero(LR, S6);
    b2.comp[0] = LR.make(-1, {BigRat(2), BigRat(0), BigRat(1)});
    form_add_term(form, a2, b2);

    const auto res = residue_form(LR, form);
    const auto gf = ghost_form(LR, form);
    for (std::size_t k = 0; k < S6.size(); ++k)
        REQUIRE(classical_residue(LR, gf[k]) == ghost_component(Q, res, S6.elements()[k]));
}

TEST_CASE("shifting a whole form commutes with the residue") {
    const TruncationSet T = quotient(S6, 2);
    auto small = make_form<RationalRing>(T);
    auto a = witt_zero(LR, T);
    a.comp[0] = LR.make(-1, {BigRat(3), BigRat(1)});
    auto b = witt_zero(LR, T);
    b.comp[0] = LR.make(1, {BigRat(1)});
    b.comp[1] = LR.make(-1, {BigRat(2)});
    form_add_term(small, a, b);
    REQUIRE(witt_eq(Q, verschiebung(Q, 2, residue_form(LR, small), S6),
                    residue_form(LR, verschiebung_form(LR, 2, small, S6))));
}

TEST_CASE("restricting a form commutes with the residue") {
    auto form = make_form<RationalRing>(S6);
    form_add_term(form, shifted_lift(1, BigRat(2), 3, S6), shifted_lift(3, BigRat(5), -1, S6));
    const TruncationSet T = make_truncation({1, 2});
    REQUIRE(witt_eq(Q, restrict_to(Q, residue_form(LR, form), T),
                    residue_form(LR, restrict_form(LR, form, T))));
}

TEST_CASE("ghost forms need a torsion-free coefficient ring") {
    PrimeFieldRing f5(BigInt(5));
    const LaurentRing<PrimeFieldRing> L5(f5, "t");
    const TruncationSet S = truncation_upto(4);
    auto form = make_form<PrimeFieldRing>(S);
    auto a = witt_zero(L5, S);
    a.comp[0] = L5.monomial(f5.from_integer(BigInt(2)), 1);
    form_add_term(form, a, a);
    REQUIRE_THROWS_AS(ghost_form(L5, form), unsupported_ring);
}

TEST_CASE("residue pairing works over an odd prime field but not over Z/6") {
    PrimeFieldRing f5(BigInt(5));
    const LaurentRing<PrimeFieldRing> L5(f5, "t");
    const TruncationSet S = truncation_upto(4);
    const auto u = f5.from_integer(BigInt(3));
    const auto alpha = verschiebung(
        L5, 1, teichmuller(L5, S, L5.monomial(u, 1)), S);
    const auto beta = teichmuller(L5, S, L5.monomial(f5.one(), -1));
    REQUIRE(witt_eq(f5, residue_pair(L5, alpha, beta),
                    witt_neg(f5, teichmuller(f5, S, u))));

    ModRing z6(BigInt(6));
    const LaurentRing<ModRing> L6(z6, "t");
    auto a6 = teichmuller(L6, S, L6.monomial(z6.one(), 1));
    REQUIRE_THROWS_AS(residue_pair(L6, a6, a6), unsupported_ring);
}

TEST_CASE("residue commutes with applying the shift to both vectors") {
    // Res(V_n a d V_n b) = V_n Res(a d b) for n = 2.
    const TruncationSet T = quotient(S6, 2);
    auto a = witt_zero(LR, T);
    a.comp[0] = LR.make(1, {BigRat(4)});
    a.comp[1] = LR.make(-1, {BigRat(1)});
    auto b = witt_zero(LR, T);
    b.comp[0] = LR.make(-1, {BigRat(2)});
    const auto lhs = residue_pair(LR, verschiebung(LR, 2, a, S6), verschiebung(LR, 2, b, S6));
    const auto rhs = verschiebung(Q, 2, residue_pair(LR, a, b), S6);
    REQUIRE(witt_eq(Q, lhs, rhs));
}
