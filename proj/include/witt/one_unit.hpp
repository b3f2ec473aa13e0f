#ifndef WITT_ONE_UNIT_HPP
#define WITT_ONE_UNIT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "witt/error.hpp"
#include "witt/poly.hpp"
#include "witt/rings.hpp"
#include "witt/truncation.hpp"
#include "witt/witt.hpp"

namespace witt {

// The ring A[T]/(T^(cap+1)): dense truncated power series. Satisfies Ring so
// it can feed the generic determinant and polynomial helpers; it is never a
// field. No base-ring division is used anywhere.
template <Ring R>
class TruncPolyRing {
public:
    using Base = R;
    using Coeff = typename R::Elem;
    using Elem = Poly<R>;

    TruncPolyRing(R base, std::size_t cap, std::string var = "T")
        : base_(std::move(base)), cap_(cap), var_(std::move(var)) {}

    const R& base() const { return base_; }
    std::size_t cap() const { return cap_; }

    Elem make(Poly<R> f) const {
        if (f.size() > cap_ + 1) f.resize(cap_ + 1);
        poly_trim(base_, f);
        return f;
    }

    Elem zero() const { return {}; }
    Elem one() const { return {base_.one()}; }
    Elem gen() const { return make(poly_monomial(base_, base_.one(), 1)); }
    Elem constant(const Coeff& c) const { return make({c}); }

    Elem add(const Elem& a, const Elem& b) const { return make(poly_add(base_, a, b)); }
    Elem sub(const Elem& a, const Elem& b) const { return make(poly_sub(base_, a, b)); }
    Elem neg(const Elem& a) const { return poly_neg(base_, a); }

    Elem mul(const Elem& a, const Elem& b) const {
        // Truncate before the convolution: coefficients past the cap are dead.
        return make(poly_mul(base_, a, b, cap_ + 1));
    }

    bool eq(const Elem& a, const Elem& b) const { return poly_eq(base_, a, b); }
    bool is_zero(const Elem& a) const { return a.empty(); }

    Elem from_integer(const BigInt& n) const { return constant(base_.from_integer(n)); }
    Elem from_rational(const BigRat& q) const { return constant(base_.from_rational(q)); }

    Elem divide_exact_int(const Elem& a, const BigInt& n) const {
        Elem out = a;
        for (auto& c : out) c = base_.divide_exact_int(c, n);
        return out;
    }

    BigInt characteristic() const { return base_.characteristic(); }
    bool torsion_free() const { return base_.torsion_free(); }
    bool is_field() const { return false; }
    std::string name() const {
        return "TruncPoly(" + base_.name() + "," + var_ + "^" + std::to_string(cap_ + 1) + ")";
    }
    std::string to_string(const Elem& a) const { return poly_to_string(base_, a, var_); }

private:
    R base_;
    std::size_t cap_;
    std::string var_;
};

// A one-unit: a power series with constant term 1, taken modulo the subgroup
// generated by factors (1 - c T^n) with n outside S. The canonical
// representative is the product form prod_{n in S} (1 - comp[n] T^n), so the
// stored data mirrors a Witt vector and the conversions are index-preserving;
// the series content lives in expansion and peeling.
template <Ring R>
struct OneUnit {
    TruncationSet S;
    std::vector<typename R::Elem> comp;
};

template <Ring R>
OneUnit<R> to_one_unit(const R&, const WittVector<R>& w) {
    return OneUnit<R>{w.S, w.comp};
}

template <Ring R>
WittVector<R> from_one_unit(const R&, const OneUnit<R>& u) {
    return WittVector<R>{u.S, u.comp};
}

// The truncated series prod_{n in S} (1 - c_n T^n) mod T^(cap+1).
template <Ring R>
Poly<R> expand_one_unit(const R& r, const OneUnit<R>& u, std::size_t cap) {
    TruncPolyRing<R> tp(r, cap);
    typename TruncPolyRing<R>::Elem acc = tp.one();
    const auto& elems = u.S.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (r.is_zero(u.comp[i])) continue;
        if (elems[i] > cap) continue;
        Poly<R> factor = poly_const(r, r.one());
        factor = poly_sub(r, factor, poly_monomial(r, u.comp[i], elems[i]));
        acc = tp.mul(acc, factor);
    }
    return acc;
}

template <Ring R>
Poly<R> expand_one_unit(const R& r, const OneUnit<R>& u) {
    return expand_one_unit(r, u, u.S.max());
}

// Peel a series with constant term 1 into product form: for ascending
// n = 1..max(S), read c_n from the T^n coefficient, divide by (1 - c_n T^n)
// (multiplying with the geometric series needs no base-ring division), keep
// c_n when n lies in S and discard it otherwise. The discard implements the
// quotient by I_S.
template <Ring R>
OneUnit<R> one_unit_from_series(const R& r, const TruncationSet& S, const Poly<R>& series) {
    const std::size_t cap = static_cast<std::size_t>(S.max());
    Poly<R> cur = series;
    if (cur.size() > cap + 1) cur.resize(cap + 1);
    poly_trim(r, cur);
    if (cur.empty() || !r.eq(cur[0], r.one()))
        throw domain_error("one-unit series must have constant term 1");
    OneUnit<R> out;
    out.S = S;
    out.comp.assign(S.size(), r.zero());
    for (std::size_t n = 1; n <= cap; ++n) {
        const typename R::Elem a = poly_coeff(r, cur, n);
        if (r.is_zero(a)) continue;
        const typename R::Elem c = r.neg(a); // cur = 1 + a T^n + ... = (1 - c T^n)(...)
        if (S.contains(n)) out.comp[S.index_of(n)] = c;
        // Divide by (1 - c T^n): multiply with sum_k (c T^n)^k, truncated.
        Poly<R> geo = poly_const(r, r.one());
        typename R::Elem ck = r.one();
        for (std::size_t k = n; k <= cap; k += n) {
            ck = r.mul(ck, c);
            geo = poly_add(r, geo, poly_monomial(r, ck, k));
        }
        cur = poly_mul(r, cur, geo, cap + 1);
    }
    return out;
}

template <Ring R>
WittVector<R> witt_from_series(const R& r, const TruncationSet& S, const Poly<R>& series) {
    return from_one_unit(r, one_unit_from_series(r, S, series));
}

// Group law on one-units: multiply the expanded series and re-peel. This is
// deliberately independent of witt_add so the two can verify each other.
template <Ring R>
OneUnit<R> one_unit_mul(const R& r, const OneUnit<R>& u, const OneUnit<R>& v) {
    if (u.S != v.S) throw domain_error("one-unit product needs matching truncation sets");
    const std::size_t cap = static_cast<std::size_t>(u.S.max());
    TruncPolyRing<R> tp(r, cap);
    return one_unit_from_series(r, u.S, tp.mul(expand_one_unit(r, u, cap), expand_one_unit(r, v, cap)));
}

} // namespace witt

#endif
