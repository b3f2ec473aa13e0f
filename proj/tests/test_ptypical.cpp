#include <catch2/catch_amalgamated.hpp>

#include <witt/ptypical.hpp>
#include <witt/rings.hpp>
#include <witt/witt.hpp>

#include "test_util.hpp"

using namespace witt;
using wtest::wv;

TEST_CASE("idempotent ghost profiles, orthogonality, partition of unity") {
    RationalRing q;
    const TruncationSet S = truncation_upto(6);
    const std::uint64_t p = 3;

    const auto parts = coprime_part(S, p); // {1, 2, 4, 5}
    REQUIRE(parts == std::vector<std::uint64_t>{1, 2, 4, 5});

    auto sum = witt_zero(q, S);
    for (auto n : parts) {
        const auto eps = epsilon_idempotent(q, S, p, n);
        for (auto s : S.elements()) {
            std::uint64_t m = s;
            while (m % p == 0) m /= p;
            REQUIRE(q.eq(ghost_component(q, eps, s), m == n ? BigRat(1) : BigRat(0)));
        }
        REQUIRE(witt_eq(q, witt_mul(q, eps, eps), eps));
        sum = witt_add(q, sum, eps);
    }
    REQUIRE(witt_eq(q, sum, witt_one(q, S)));

    // Distinct idempotents multiply to zero.
    REQUIRE(witt_eq(q,
                    witt_mul(q, epsilon_idempotent(q, S, p, 1), epsilon_idempotent(q, S, p, 2)),
                    witt_zero(q, S)));
}

TEST_CASE("idempotents factor as shifted products over the other primes") {
    RationalRing q;
    const TruncationSet S = truncation_upto(6);
    const std::uint64_t p = 3;

    for (auto n : coprime_part(S, p)) {
        const TruncationSet Sn = quotient(S, n);
        auto u = witt_one(q, Sn);
        for (auto e : Sn.elements()) {
            if (e == 1 || e == p || !is_prime_u64(e)) continue;
            auto vq = verschiebung(q, e, witt_one(q, quotient(Sn, e)), Sn);
            vq = witt_mul(q, vq, witt_int_inverse(q, Sn, e));
            u = witt_mul(q, u, witt_sub(q, witt_one(q, Sn), vq));
        }
        auto prod = verschiebung(q, n, u, S);
        prod = witt_mul(q, prod, witt_int_inverse(q, S, n));
        REQUIRE(witt_eq(q, epsilon_idempotent(q, S, p, n), prod));
    }
}

TEST_CASE("splitting separates prime-to-p indices and restricts to p-power slots") {
    RationalRing q;
    const TruncationSet S = truncation_upto(6);
    const std::uint64_t p = 3;

    // Split of a multiplicative lift: the n-th piece of [c] is [c^n] on the
    // p-power slots of S/n.
    const auto w = teichmuller(q, S, BigRat(5));
    const auto sp = ptypical_split(q, w, p);
    REQUIRE(sp.parts.size() == 4);
    for (const auto& [n, part] : sp.parts) {
        REQUIRE(part.S == p_part(quotient(S, n), p));
        const auto want = teichmuller(q, part.S, ring_pow(q, BigRat(5), n));
        REQUIRE(witt_eq(q, part, want));
    }
    // The pieces over S = {1..6}: n=1 and n=2 see slots {1, 3}, n=4 and n=5
    // see only {1}.
    REQUIRE(sp.parts[0].second.S.size() == 2);
    REQUIRE(sp.parts[1].second.S.size() == 2);
    REQUIRE(sp.parts[2].second.S.size() == 1);
    REQUIRE(sp.parts[3].second.S.size() == 1);
}

TEST_CASE("split and reassembly are mutually inverse") {
    const TruncationSet S = truncation_upto(6);
    const std::uint64_t p = 3;

    SECTION("over the rationals, both padding strategies") {
        RationalRing q;
        const auto w = wv(q, S, {3, -1, 2, 0, 7, -5});
        const auto sp = ptypical_split(q, w, p);
        REQUIRE(witt_eq(q, ptypical_unsplit(q, sp, PadMode::Zero), w));
        REQUIRE(witt_eq(q, ptypical_unsplit(q, sp, PadMode::Teichmuller), w));
    }

    SECTION("over the prime field, both padding strategies") {
        PrimeFieldRing f3(BigInt(3));
        const auto w = wv(f3, S, {1, 2, 0, 1, 2, 1});
        const auto sp = ptypical_split(f3, w, p);
        REQUIRE(witt_eq(f3, ptypical_unsplit(f3, sp, PadMode::Zero), w));
        REQUIRE(witt_eq(f3, ptypical_unsplit(f3, sp, PadMode::Teichmuller), w));
    }

    SECTION("assembling and re-splitting returns the same pieces") {
        RationalRing q;
        const auto w = wv(q, S, {0, 4, -3, 1, 0, 2});
        const auto sp = ptypical_split(q, w, p);
        const auto sp2 = ptypical_split(q, ptypical_unsplit(q, sp), p);
        REQUIRE(sp.parts.size() == sp2.parts.size());
        for (std::size_t i = 0; i < sp.parts.size(); ++i) {
            REQUIRE(sp.parts[i].first == sp2.parts[i].first);
            REQUIRE(witt_eq(q, sp.parts[i].second, sp2.parts[i].second));
        }
    }
}

TEST_CASE("p-typical machinery rejects unsupported inputs") {
    RationalRing q;
    const TruncationSet S = truncation_upto(6);

    REQUIRE_THROWS_AS(epsilon_idempotent(q, S, 2, 1), domain_error);  // even prime
    REQUIRE_THROWS_AS(epsilon_idempotent(q, S, 9, 1), domain_error);  // not prime
    REQUIRE_THROWS_AS(epsilon_idempotent(q, S, 3, 3), domain_error);  // index divisible by p
    REQUIRE_THROWS_AS(epsilon_idempotent(q, S, 3, 7), domain_error);  // index outside S
    REQUIRE_THROWS_AS(ptypical_split(q, witt_one(q, S), 2), domain_error);

    ModRing z6(BigInt(6));
    REQUIRE_THROWS_AS(epsilon_idempotent(z6, S, 3, 1), unsupported_ring);
    REQUIRE_THROWS_AS(ptypical_split(z6, witt_one(z6, S), 3), unsupported_ring);

    // Characteristic p^k is fine: the idempotent coordinates are p-integral.
    ModRing z9(BigInt(9));
    const auto eps = epsilon_idempotent(z9, S, 3, 1);
    REQUIRE(witt_eq(z9, witt_mul(z9, eps, eps), eps));
}
