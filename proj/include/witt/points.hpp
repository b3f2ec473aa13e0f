#ifndef WITT_POINTS_HPP
#define WITT_POINTS_HPP

#include <string>
#include <utility>
#include <vector>

#include "witt/error.hpp"
#include "witt/factor.hpp"
#include "witt/free_algebra.hpp"
#include "witt/laurent.hpp"
#include "witt/poly.hpp"
#include "witt/ratfunc.hpp"
#include "witt/rings.hpp"

namespace witt {

// A closed point of the projective line over k: either the point at infinity
// or a monic irreducible polynomial in the affine coordinate. The residue
// field is k[x]/(pi), presented as a free algebra on the power basis.
template <Ring K>
struct ClosedPoint {
    bool at_infinity = false;
    Poly<K> pi; // monic irreducible; empty iff at_infinity

    std::size_t degree() const { return at_infinity ? 1 : static_cast<std::size_t>(poly_deg(pi)); }
};

template <Ring K>
ClosedPoint<K> point_at_infinity() {
    return ClosedPoint<K>{true, {}};
}

template <Ring K>
ClosedPoint<K> finite_point(const K& k, Poly<K> pi) {
    if (poly_deg(pi) < 1) throw domain_error("a finite closed point needs a nonconstant polynomial");
    if (!k.eq(pi.back(), k.one())) throw domain_error("closed points are given by monic polynomials");
    return ClosedPoint<K>{false, std::move(pi)};
}

template <Ring K>
std::string point_to_string(const K& k, const ClosedPoint<K>& P, const std::string& var = "x") {
    return P.at_infinity ? "infinity" : point_to_string_finite(k, P, var);
}

template <Ring K>
std::string point_to_string_finite(const K& k, const ClosedPoint<K>& P, const std::string& var) {
    return "(" + poly_to_string(k, P.pi, var) + ")";
}

template <Ring K>
bool point_eq(const K& k, const ClosedPoint<K>& a, const ClosedPoint<K>& b) {
    if (a.at_infinity != b.at_infinity) return false;
    return a.at_infinity || poly_eq(k, a.pi, b.pi);
}

// The residue field k(P) as a k-algebra. At infinity the residue field is k
// itself, presented as k[y]/(y) so every caller sees one shape.
template <Ring K>
FreeAlgebraRing<K> residue_field(const K& k, const ClosedPoint<K>& P,
                                 const std::string& var = "y") {
    if (P.at_infinity)
        return FreeAlgebraRing<K>(k, Poly<K>{k.zero(), k.one()}, var);
    return FreeAlgebraRing<K>(k, P.pi, var);
}

// Order of the pole of f at P (0 when f is regular there, including f = 0).
template <RingWithInv K>
long pole_order_at(const K& k, const RatFunc<K>& f, const ClosedPoint<K>& P) {
    if (poly_is_zero(f.num)) return 0;
    if (P.at_infinity) {
        const long d = poly_deg(f.num) - poly_deg(f.den);
        return d > 0 ? d : 0;
    }
    long ord = 0;
    Poly<K> den = f.den;
    for (;;) {
        auto [q, rem] = poly_divmod(k, den, P.pi);
        if (!poly_is_zero(rem)) break;
        ++ord;
        den = q;
    }
    // The representation is reduced, so the numerator carries no factor of pi.
    return ord;
}

// Taylor coefficients of f around the generator of k(P): repeated synthetic
// division by (x - ybar) over k(P), valid in any characteristic. Polynomials
// expand exactly (infinite window precision).
template <RingWithInv K>
LaurentWindow<typename FreeAlgebraRing<K>::Elem> expand_poly_at(
    const K& /*k*/, const FreeAlgebraRing<K>& kp, const LaurentRing<FreeAlgebraRing<K>>& lt,
    const Poly<K>& f, const ClosedPoint<K>& P) {
    using FA = FreeAlgebraRing<K>;
    if (poly_is_zero(f)) return lt.zero();
    if (P.at_infinity) {
        // x = 1/t: a_k x^k contributes a_k t^(-k).
        const std::size_t d = f.size() - 1;
        std::vector<typename FA::Elem> out(f.size(), kp.zero());
        for (std::size_t i = 0; i < f.size(); ++i) out[d - i] = kp.embed(f[i]);
        return lt.make(-static_cast<long>(d), std::move(out));
    }
    Poly<FreeAlgebraRing<K>> cur;
    cur.reserve(f.size());
    for (const auto& c : f) cur.push_back(kp.embed(c));
    poly_trim(kp, cur);
    const typename FA::Elem ybar = kp.gen();
    std::vector<typename FA::Elem> taylor;
    while (!cur.empty()) {
        // Divide by (x - ybar): remainder is the next Taylor coefficient.
        typename FA::Elem rem = kp.zero();
        Poly<FreeAlgebraRing<K>> q(cur.size() > 1 ? cur.size() - 1 : 0, kp.zero());
        for (std::size_t i = cur.size(); i-- > 0;) {
            typename FA::Elem c = kp.add(cur[i], kp.mul(rem, ybar));
            if (i == 0) {
                taylor.push_back(c);
            } else {
                q[i - 1] = c;
            }
            rem = c;
        }
        poly_trim(kp, q);
        cur = std::move(q);
    }
    return lt.make(0, std::move(taylor));
}

// f = num/den as a window in the local parameter at P (t = x - ybar at a
// finite point, t = 1/x at infinity), to absolute precision target_prec.
template <RingWithInv K>
LaurentWindow<typename FreeAlgebraRing<K>::Elem> laurent_expand(
    const K& k, const FreeAlgebraRing<K>& kp, const LaurentRing<FreeAlgebraRing<K>>& lt,
    const RatFunc<K>& f, const ClosedPoint<K>& P, long target_prec) {
    const auto num = expand_poly_at(k, kp, lt, f.num, P);
    const auto den = expand_poly_at(k, kp, lt, f.den, P);
    return lt.mul(num, lt.invert(den, target_prec));
}

} // namespace witt

#endif
