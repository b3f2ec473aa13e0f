#ifndef WITT_CURVE_RESIDUES_HPP
#define WITT_CURVE_RESIDUES_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "witt/error.hpp"
#include "witt/factor.hpp"
#include "witt/forms.hpp"
#include "witt/free_algebra.hpp"
#include "witt/laurent.hpp"
#include "witt/points.hpp"
#include "witt/poly.hpp"
#include "witt/ratfunc.hpp"
#include "witt/rings.hpp"
#include "witt/trace.hpp"
#include "witt/truncation.hpp"
#include "witt/witt.hpp"

namespace witt {

// Forms over the function field k(x): terms a * d(b) whose component entries
// are rational functions. Residues are taken pointwise on the projective
// line and land in W_S(k).
template <Ring K>
struct RatFormTerm {
    WittVector<RatFuncRing<K>> a;
    WittVector<RatFuncRing<K>> b;
};

template <Ring K>
struct RatOneForm {
    TruncationSet S;
    std::vector<RatFormTerm<K>> terms;
};

template <Ring K>
RatOneForm<K> make_rat_form(const TruncationSet& S) {
    return RatOneForm<K>{S, {}};
}

template <Ring K>
void rat_form_add_term(RatOneForm<K>& w, WittVector<RatFuncRing<K>> a,
                       WittVector<RatFuncRing<K>> b) {
    if (a.S != w.S || b.S != w.S) throw domain_error("form term on a different truncation set");
    w.terms.push_back({std::move(a), std::move(b)});
}

// Every closed point where some component could be singular: the irreducible
// factors of all numerators and denominators, plus infinity. A superset of
// the support is harmless -- extra points contribute zero.
template <RingWithInv K>
std::vector<ClosedPoint<K>> support_points(const K& k, const RatOneForm<K>& w) {
    std::vector<ClosedPoint<K>> out;
    auto add = [&](const Poly<K>& f) {
        if (poly_deg(f) < 1) return;
        for (const auto& fac : factor_poly(k, f).factors) {
            ClosedPoint<K> P = finite_point(k, fac.poly);
            bool seen = false;
            for (const auto& q : out) seen = seen || point_eq(k, q, P);
            if (!seen) out.push_back(std::move(P));
        }
    };
    for (const auto& term : w.terms) {
        for (const auto* side : {&term.a, &term.b}) {
            for (const auto& comp : side->comp) {
                add(comp.num);
                add(comp.den);
            }
        }
    }
    out.push_back(point_at_infinity<K>());
    return out;
}

template <RingWithInv K>
long form_pole_bound(const K& k, const RatOneForm<K>& w, const ClosedPoint<K>& P) {
    long d = 0;
    for (const auto& term : w.terms)
        for (const auto* side : {&term.a, &term.b})
            for (const auto& comp : side->comp) d = std::max(d, pole_order_at(k, comp, P));
    return d;
}

// Local residue at P: expand every component in the local parameter to the
// policy precision, take the Witt residue over k(P)((t)), then trace down to
// k. Window precision is a prediction, not a proof, so on an
// insufficient_precision the expansion restarts with twice the precision, up
// to a fixed number of doublings.
template <RingWithInv K>
WittVector<K> local_residue(const K& k, const RatOneForm<K>& w, const ClosedPoint<K>& P) {
    using FA = FreeAlgebraRing<K>;
    const long maxS = static_cast<long>(w.S.max());
    const long pole = form_pole_bound(k, w, P);
    const long base_prec = maxS * (1 + pole) + maxS;
    const FA kp = residue_field(k, P);
    const LaurentRing<FA> lt(kp, "t");

    for (int attempt = 0;; ++attempt) {
        const long target = base_prec << attempt;
        try {
            WittOneForm<FA> local = make_form<FA>(w.S);
            for (const auto& term : w.terms) {
                WittVector<LaurentRing<FA>> a = witt_zero(lt, w.S);
                WittVector<LaurentRing<FA>> b = witt_zero(lt, w.S);
                for (std::size_t i = 0; i < w.S.size(); ++i) {
                    a.comp[i] = laurent_expand(k, kp, lt, term.a.comp[i], P, target);
                    b.comp[i] = laurent_expand(k, kp, lt, term.b.comp[i], P, target);
                }
                form_add_term(local, std::move(a), std::move(b));
            }
            return trace_witt(kp, residue_form(lt, local));
        } catch (const insufficient_precision&) {
            if (attempt >= 8) throw;
        }
    }
}

// Sum of the local residues over (a superset of) the support.
template <RingWithInv K>
WittVector<K> residue_sum(const K& k, const RatOneForm<K>& w) {
    WittVector<K> acc = witt_zero(k, w.S);
    for (const auto& P : support_points(k, w))
        acc = witt_add(k, acc, local_residue(k, w, P));
    return acc;
}

// The residue theorem on the projective line: the local residues sum to zero.
template <RingWithInv K>
bool verify_residue_theorem(const K& k, const RatOneForm<K>& w) {
    return witt_eq(k, residue_sum(k, w), witt_zero(k, w.S));
}

// Both sides of the trace/residue exchange across B((t)) / A((z)), z = t^e:
//   Tr_{B/A}( Res_t( b * d(a) ) )  vs  Res_z( Tr_{B((t))/A((z))}(b) * d(a) ),
// with b over B((t)) and a over A((z)). Returns the pair (left, right).
template <Ring A>
std::pair<WittVector<A>, WittVector<A>> trace_residue_exchange(
    const FreeAlgebraRing<A>& B, std::uint64_t e,
    const WittVector<LaurentRing<FreeAlgebraRing<A>>>& b,
    const WittVector<LaurentRing<A>>& a) {
    using FA = FreeAlgebraRing<A>;
    const A& baseA = B.base();
    const LaurentRing<FA> LB(B, "t");
    const LaurentRing<A> LZ(baseA, "z");
    if (a.S != b.S) throw domain_error("exchange needs matching truncation sets");

    // Left: view a inside B((t)) through z = t^e, pair, trace down.
    WittVector<LaurentRing<FA>> a_t = witt_zero(LB, a.S);
    for (std::size_t i = 0; i < a.comp.size(); ++i) {
        const auto& win = a.comp[i];
        std::vector<typename FA::Elem> coeffs;
        coeffs.reserve(win.coeffs.size());
        for (const auto& c : win.coeffs) coeffs.push_back(B.embed(c));
        a_t.comp[i] = LB.inflate(LB.make(win.lo, std::move(coeffs), win.prec),
                                 static_cast<long>(e));
    }
    WittOneForm<FA> left_form = make_form<FA>(a.S);
    form_add_term(left_form, b, a_t);
    const WittVector<A> left = trace_witt(B, residue_form(LB, left_form));

    // Right: trace b to A((z)) first, then pair against a over A((z)).
    WittOneForm<A> right_form = make_form<A>(a.S);
    form_add_term(right_form, trace_witt_laurent(B, e, b, "z"), a);
    const WittVector<A> right = residue_form(LZ, right_form);
    return {left, right};
}

} // namespace witt

#endif
