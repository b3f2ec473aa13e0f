#ifndef WITT_CHOW_HPP
#define WITT_CHOW_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "witt/error.hpp"
#include "witt/factor.hpp"
#include "witt/free_algebra.hpp"
#include "witt/one_unit.hpp"
#include "witt/points.hpp"
#include "witt/poly.hpp"
#include "witt/rings.hpp"
#include "witt/trace.hpp"
#include "witt/truncation.hpp"
#include "witt/witt.hpp"

namespace witt {

// A zero-cycle on the multiplicative group over k: closed points of the
// affine line avoiding the origin, with integer multiplicities. Points are
// monic irreducible polynomials with nonzero constant term.
template <Ring K>
struct CyclePoint {
    Poly<K> pi;
    BigInt mult;
};

template <Ring K>
struct ZeroCycle {
    std::vector<CyclePoint<K>> points;
};

template <Ring K>
void cycle_add_point(const K& k, ZeroCycle<K>& z, Poly<K> pi, BigInt mult) {
    if (poly_deg(pi) < 1) throw domain_error("cycle points are nonconstant monic polynomials");
    if (!k.eq(pi.back(), k.one())) throw domain_error("cycle points are monic polynomials");
    if (k.is_zero(pi[0]))
        throw domain_error("cycle points must avoid the origin (nonzero constant term)");
    if (mult == 0) return;
    for (auto& pt : z.points) {
        if (poly_eq(k, pt.pi, pi)) {
            pt.mult += mult;
            return;
        }
    }
    z.points.push_back({std::move(pi), std::move(mult)});
}

// div(f) on the multiplicative group: the irreducible factors of f with
// their multiplicities. The scalar unit is discarded; f may not vanish at
// the origin, since div(f) must be supported away from it.
template <RingWithInv K>
ZeroCycle<K> divisor_on_gm(const K& k, const Poly<K>& f) {
    if (poly_is_zero(f)) throw domain_error("the zero function has no divisor");
    if (k.is_zero(poly_coeff(k, f, 0)))
        throw domain_error("divisor support must avoid the origin: constant term is zero");
    ZeroCycle<K> out;
    for (const auto& fac : factor_poly(k, f).factors)
        cycle_add_point(k, out, fac.poly, BigInt(fac.multiplicity));
    return out;
}

// theta at level 1: a point P goes to Tr_{k(P)/k}( [x(P)]^{-1} ), extended
// additively over the cycle, with values in W_S(k) for S = {1..m}. The
// Teichmueller inverse exists exactly when the slot-1 entry x(P) is a unit.
template <RingWithInv K>
WittVector<K> theta1(const K& k, const ZeroCycle<K>& z, std::uint64_t m) {
    if (k.characteristic() == 2)
        throw unsupported_ring("theta needs characteristic different from 2");
    const TruncationSet S = truncation_upto(m);
    WittVector<K> acc = witt_zero(k, S);
    for (const auto& pt : z.points) {
        const FreeAlgebraRing<K> kp(k, pt.pi, "y");
        typename FreeAlgebraRing<K>::Elem xinv;
        try {
            xinv = kp.inv(kp.gen());
        } catch (const not_invertible&) {
            throw not_invertible("non-invertible slot-1 component");
        }
        const WittVector<K> tr = trace_witt(kp, teichmuller(kp, S, xinv));
        acc = witt_add(k, acc, witt_scale_int(k, pt.mult, tr));
    }
    return acc;
}

// w(f(T)/f(0)) as a Witt vector over S = {1..m}: normalize the constant term
// to 1, read the polynomial as a truncated series in T, and peel.
template <RingWithInv K>
WittVector<K> one_unit_of_poly(const K& k, const Poly<K>& f, std::uint64_t m) {
    if (poly_is_zero(f)) throw domain_error("the zero polynomial is not a one-unit");
    const typename K::Elem c0 = poly_coeff(k, f, 0);
    if (k.is_zero(c0)) throw not_invertible("series constant term must be a unit");
    const typename K::Elem c0inv = k.inv(c0);
    Poly<K> series = poly_scale(k, c0inv, f);
    return witt_from_series(k, truncation_upto(m), series);
}

// The divisor/series compatibility: theta(div f) - theta(div g) equals
// w(f/f(0)) - w(g/g(0)) in W_{1..m}(k), exactly.
template <RingWithInv K>
bool verify_theta(const K& k, const Poly<K>& f, const Poly<K>& g, std::uint64_t m) {
    const WittVector<K> lhs =
        witt_sub(k, theta1(k, divisor_on_gm(k, f), m), theta1(k, divisor_on_gm(k, g), m));
    const WittVector<K> rhs =
        witt_sub(k, one_unit_of_poly(k, f, m), one_unit_of_poly(k, g, m));
    return witt_eq(k, lhs, rhs);
}

} // namespace witt

#endif
