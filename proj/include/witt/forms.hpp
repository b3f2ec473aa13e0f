#ifndef WITT_FORMS_HPP
#define WITT_FORMS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "witt/error.hpp"
#include "witt/laurent.hpp"
#include "witt/numeric.hpp"
#include "witt/rings.hpp"
#include "witt/truncation.hpp"
#include "witt/witt.hpp"
#include "witt/witt_laurent.hpp"

namespace witt {

// A differential 1-form over Witt vectors of Laurent series: a formal sum of
// terms a * d(b). Terms are kept syntactically -- no simplification and no
// equality on forms; every question about a form is asked through the ghost
// map or the residue.
template <Ring R>
struct WittFormTerm {
    WittVector<LaurentRing<R>> a;
    WittVector<LaurentRing<R>> b;
};

template <Ring R>
struct WittOneForm {
    TruncationSet S;
    std::vector<WittFormTerm<R>> terms;
};

template <Ring R>
WittOneForm<R> make_form(const TruncationSet& S) {
    return WittOneForm<R>{S, {}};
}

template <Ring R>
void form_add_term(WittOneForm<R>& w, WittVector<LaurentRing<R>> a, WittVector<LaurentRing<R>> b) {
    if (a.S != w.S || b.S != w.S) throw domain_error("form term on a different truncation set");
    w.terms.push_back({std::move(a), std::move(b)});
}

// The s-th ghost component of a * d(b), as a classical 1-form g(t) dt
// represented by its window g. Uses the derivation identity
//   (1/s) d(gh_s(b)) = sum_{e | s} b_e^(s/e - 1) * b_e'
// so no division happens; defined whenever the base has no additive torsion.
template <Ring R>
std::vector<typename LaurentRing<R>::Elem> ghost_form(const LaurentRing<R>& lr,
                                                      const WittOneForm<R>& w) {
    if (!lr.torsion_free())
        throw unsupported_ring("ghost components of forms need a torsion-free base, not " +
                               lr.base().name());
    std::vector<typename LaurentRing<R>::Elem> out;
    out.reserve(w.S.size());
    for (auto s : w.S.elements()) {
        typename LaurentRing<R>::Elem acc = lr.zero();
        for (const auto& term : w.terms) {
            const typename LaurentRing<R>::Elem gha = ghost_component(lr, term.a, s);
            if (lr.is_zero(gha)) continue;
            typename LaurentRing<R>::Elem dpart = lr.zero();
            for (auto e : divisors_of(s)) {
                const auto& be = witt_component(term.b, e);
                if (lr.is_zero(be)) continue;
                dpart = lr.add(dpart, lr.mul(ring_pow(lr, be, s / e - 1), lr.derivative(be)));
            }
            acc = lr.add(acc, lr.mul(gha, dpart));
        }
        out.push_back(acc);
    }
    return out;
}

// Residue of a classical 1-form g(t) dt: the coefficient of t^(-1) in g.
template <Ring R>
typename R::Elem classical_residue(const LaurentRing<R>& lr,
                                   const typename LaurentRing<R>::Elem& g) {
    return lr.coeff_at(g, -1);
}

// V_n on forms acts termwise on both factors; ghost components obey
// Gh_s(V_n w) = n * Gh_{s/n}(w), which the tests check.
template <Ring R>
WittOneForm<R> verschiebung_form(const LaurentRing<R>& lr, std::uint64_t n,
                                 const WittOneForm<R>& w, const TruncationSet& S) {
    WittOneForm<R> out = make_form<R>(S);
    for (const auto& term : w.terms)
        out.terms.push_back(
            {verschiebung(lr, n, term.a, S), verschiebung(lr, n, term.b, S)});
    return out;
}

template <Ring R>
WittOneForm<R> restrict_form(const LaurentRing<R>& lr, const WittOneForm<R>& w,
                             const TruncationSet& T) {
    WittOneForm<R> out = make_form<R>(T);
    for (const auto& term : w.terms)
        out.terms.push_back({restrict_to(lr, term.a, T), restrict_to(lr, term.b, T)});
    return out;
}

// Rings the residue pairing is defined over: no additive torsion, or
// characteristic an odd prime power. (Characteristic 2 needs conventions this
// library does not take a position on.)
template <Ring R>
void require_residue_base(const R& r) {
    if (r.torsion_free()) return;
    BigInt c = r.characteristic();
    if (c > 1 && c % 2 != 0) {
        BigInt p = c;
        // smallest prime factor, then check c is a power of it
        for (BigInt q(3); q * q <= c; q += 2)
            if (c % q == 0) {
                p = q;
                break;
            }
        BigInt m = c;
        while (m % p == 0) m /= p;
        if (m == 1) return;
    }
    throw unsupported_ring("the residue pairing needs a torsion-free base or odd prime-power "
                           "characteristic, not " +
                           r.name());
}

// Res(a db) for a single pair of Witt vectors over A((t)): decompose both
// sides canonically and accumulate
//   sgn(i) * gcd(i,j) * V_{mn/c}([x^(m/c) y^(n/c)])   over  { i n + j m = 0 },
// with c = gcd(m, n). Exponent bounds: a pair needs j*m = -i*n, so the
// exponents that can ever contribute are capped by the other side's pole
// order times max(S); both decompositions are cut there.
template <Ring R>
WittVector<R> residue_pair(const LaurentRing<R>& lr, const WittVector<LaurentRing<R>>& a,
                           const WittVector<LaurentRing<R>>& b) {
    require_residue_base(lr.base());
    if (a.S != b.S) throw domain_error("residue pairing needs matching truncation sets");
    const R& base = lr.base();
    const TruncationSet& S = a.S;
    const long maxS = static_cast<long>(S.max());
    WittVector<R> out = witt_zero(base, S);
    if (S.empty()) return out;

    const long da = max_pole_order(lr, a);
    const long db = max_pole_order(lr, b);
    const WittLaurentDecomposition<R> A = decompose_laurent(lr, a, db * maxS);
    const WittLaurentDecomposition<R> B = decompose_laurent(lr, b, da * maxS);

    for (const auto& [n, aterms] : A.rows) {
        for (const auto& [m, bterms] : B.rows) {
            const std::uint64_t c = gcd_u64(m, n);
            const std::uint64_t v = (m / c) * n;
            if (!S.contains(v)) continue;
            for (const auto& ta : aterms) {
                for (const auto& tb : bterms) {
                    const long i = tb.j, j = ta.j;
                    if (i == 0) continue;
                    if (i * static_cast<long>(n) + j * static_cast<long>(m) != 0) continue;
                    const std::uint64_t g =
                        gcd_u64(static_cast<std::uint64_t>(i < 0 ? -i : i),
                                static_cast<std::uint64_t>(j < 0 ? -j : j));
                    const typename R::Elem x =
                        base.mul(ring_pow(base, ta.a, m / c), ring_pow(base, tb.a, n / c));
                    WittVector<R> term =
                        verschiebung(base, v, teichmuller(base, quotient(S, v), x), S);
                    const long scale = (i > 0 ? 1 : -1) * static_cast<long>(g);
                    out = witt_add(base, out, witt_scale_int(base, BigInt(scale), term));
                }
            }
        }
    }
    return out;
}

// Residue of a form: sum of the pairings of its terms.
template <Ring R>
WittVector<R> residue_form(const LaurentRing<R>& lr, const WittOneForm<R>& w) {
    WittVector<R> out = witt_zero(lr.base(), w.S);
    for (const auto& term : w.terms)
        out = witt_add(lr.base(), out, residue_pair(lr, term.a, term.b));
    return out;
}

} // namespace witt

#endif
