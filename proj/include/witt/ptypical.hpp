#ifndef WITT_PTYPICAL_HPP
#define WITT_PTYPICAL_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "witt/error.hpp"
#include "witt/numeric.hpp"
#include "witt/rings.hpp"
#include "witt/sympoly.hpp"
#include "witt/truncation.hpp"
#include "witt/witt.hpp"

namespace witt {

// Splitting W_S(A) into p-typical pieces along the idempotents attached to
// the indices coprime to p. Requires p odd; characteristic-2 style subtleties
// are deliberately out of scope, and the coefficient ring must have
// characteristic 0 or a power of p for the idempotent coordinates to exist.

enum class PadMode { Zero, Teichmuller };

inline void require_odd_prime(std::uint64_t p) {
    if (!is_prime_u64(p) || p == 2) throw domain_error("expected an odd prime, got " + std::to_string(p));
}

template <Ring R>
void require_p_local_ring(const R& r, std::uint64_t p) {
    BigInt c = r.characteristic();
    if (c == 0) return;
    while (c % BigInt(p) == 0) c /= BigInt(p);
    if (c != 1)
        throw unsupported_ring("p-typical decomposition over " + r.name() +
                               " needs characteristic 0 or a power of " + std::to_string(p));
}

template <Ring R>
struct PTypicalSplit {
    std::uint64_t p = 0;
    TruncationSet S; // the original index set
    // One piece per n in S coprime to p, indexed by the p-powers of S/n.
    std::vector<std::pair<std::uint64_t, WittVector<R>>> parts;
};

// The idempotent attached to n: the unique Witt vector whose ghost profile is
// the indicator of { s in S : s = n * p^k }. Its coordinates are p-integral
// rationals, so they map into any ring of characteristic 0 or p^k.
template <Ring R>
WittVector<R> epsilon_idempotent(const R& r, const TruncationSet& S, std::uint64_t p,
                                 std::uint64_t n) {
    require_odd_prime(p);
    require_p_local_ring(r, p);
    if (!S.contains(n) || n % p == 0)
        throw domain_error("idempotent index must lie in S and be coprime to p");
    RationalRing q;
    std::vector<BigRat> g;
    g.reserve(S.size());
    for (auto s : S.elements()) {
        std::uint64_t m = s;
        while (m % p == 0) m /= p;
        g.push_back(m == n ? BigRat(1) : BigRat(0));
    }
    const WittVector<RationalRing> wq = unghost(q, S, g);
    WittVector<R> out = witt_zero(r, S);
    for (std::size_t i = 0; i < wq.comp.size(); ++i) out.comp[i] = r.from_rational(wq.comp[i]);
    return out;
}

// The n-th p-typical piece is F_n(w) restricted to the p-powers of S/n.
template <Ring R>
PTypicalSplit<R> ptypical_split(const R& r, const WittVector<R>& w, std::uint64_t p) {
    require_odd_prime(p);
    require_p_local_ring(r, p);
    PTypicalSplit<R> out;
    out.p = p;
    out.S = w.S;
    for (auto n : coprime_part(w.S, p)) {
        const TruncationSet Spart = p_part(quotient(w.S, n), p);
        out.parts.emplace_back(n, restrict_to(r, frobenius(r, n, w), Spart));
    }
    return out;
}

namespace detail {

// Pad a p-typical piece out to the full quotient set S/n. The slots at
// non-p-powers are free: the reassembly is independent of their value, which
// the two strategies exercise (all-zero, or powers of the slot-1 entry).
template <Ring R>
WittVector<R> pad_part(const R& r, const WittVector<R>& part, const TruncationSet& Sn,
                       std::uint64_t p, PadMode mode) {
    WittVector<R> lift = witt_zero(r, Sn);
    const auto& elems = Sn.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
        std::uint64_t m = elems[i];
        while (m % p == 0) m /= p;
        if (m == 1) {
            lift.comp[i] = witt_component(part, elems[i]);
        } else if (mode == PadMode::Teichmuller) {
            lift.comp[i] = ring_pow(r, witt_component(part, 1), elems[i]);
        }
    }
    return lift;
}

// Direct reassembly sum_n (1/n) * eps_n * V_n(lift_n); the scalars exist in
// any ring where the relevant integers are invertible, so this path serves
// torsion-free coefficients and builds the universal table symbolically.
template <Ring R>
WittVector<R> unsplit_direct(const R& r, const PTypicalSplit<R>& sp, PadMode mode) {
    WittVector<R> out = witt_zero(r, sp.S);
    for (const auto& [n, part] : sp.parts) {
        const TruncationSet Sn = quotient(sp.S, n);
        const WittVector<R> lift = pad_part(r, part, Sn, sp.p, mode);
        WittVector<R> term = verschiebung(r, n, lift, sp.S);
        term = witt_mul(r, term, epsilon_idempotent(r, sp.S, sp.p, n));
        term = witt_mul(r, term, witt_int_inverse(r, sp.S, n));
        out = witt_add(r, out, term);
    }
    return out;
}

// Universal reassembly table: slot polynomials in one variable per component
// of the split (variable id s = n * p^j addresses piece n, slot p^j). The
// coefficients come out p-integral, so evaluation lands in every ring of
// characteristic 0 or p^k.
using PTypicalTable = std::vector<SymPoly<BigRat>>;

inline const PTypicalTable& ptypical_table(const TruncationSet& S, std::uint64_t p, PadMode mode) {
    static std::map<std::string, PTypicalTable> cache;
    static std::mutex mu;
    const std::string key =
        std::to_string(p) + "|" + (mode == PadMode::Zero ? "z" : "t") + "|" + S.to_string();
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    SymRing<BigRat> sr;
    PTypicalSplit<SymRing<BigRat>> sp;
    sp.p = p;
    sp.S = S;
    for (auto n : coprime_part(S, p)) {
        const TruncationSet Spart = p_part(quotient(S, n), p);
        WittVector<SymRing<BigRat>> part = witt_zero(sr, Spart);
        for (std::size_t i = 0; i < Spart.size(); ++i) {
            const std::uint64_t slot = n * Spart.elements()[i];
            part.comp[i] = SymRing<BigRat>::var(static_cast<std::uint32_t>(slot));
        }
        sp.parts.emplace_back(n, std::move(part));
    }
    const WittVector<SymRing<BigRat>> w = unsplit_direct(sr, sp, mode);
    return cache.emplace(key, w.comp).first->second;
}

} // namespace detail

// Reassemble a split. The result is independent of the padding strategy; both
// are kept to witness that fact in the test suites.
template <Ring R>
WittVector<R> ptypical_unsplit(const R& r, const PTypicalSplit<R>& sp,
                               PadMode mode = PadMode::Zero) {
    require_odd_prime(sp.p);
    require_p_local_ring(r, sp.p);
    if (r.torsion_free()) return detail::unsplit_direct(r, sp, mode);

    const detail::PTypicalTable& table = detail::ptypical_table(sp.S, sp.p, mode);
    auto lookup = [&](std::uint32_t id) -> const typename R::Elem& {
        const std::uint64_t s = id;
        std::uint64_t n = s;
        while (n % sp.p == 0) n /= sp.p;
        for (const auto& [m, part] : sp.parts)
            if (m == n) return witt_component(part, s / n);
        throw domain_error("split is missing the piece for index " + std::to_string(n));
    };
    WittVector<R> out = witt_zero(r, sp.S);
    for (std::size_t i = 0; i < table.size(); ++i) out.comp[i] = eval_sympoly(r, table[i], lookup);
    return out;
}

} // namespace witt

#endif
