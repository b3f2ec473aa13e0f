#ifndef WITT_WITT_HPP
#define WITT_WITT_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "witt/error.hpp"
#include "witt/numeric.hpp"
#include "witt/poly.hpp"
#include "witt/rings.hpp"
#include "witt/sympoly.hpp"
#include "witt/truncation.hpp"

namespace witt {

// A big Witt vector over the truncation set S: one coordinate per element of
// S, stored in increasing slot order.
template <Ring R>
struct WittVector {
    TruncationSet S;
    std::vector<typename R::Elem> comp;
};

template <Ring R>
WittVector<R> make_witt(const R& r, TruncationSet S, std::vector<typename R::Elem> comp) {
    (void)r;
    if (comp.size() != S.size())
        throw domain_error("component count " + std::to_string(comp.size()) +
                           " does not match truncation set " + S.to_string());
    return {std::move(S), std::move(comp)};
}

template <Ring R>
WittVector<R> witt_zero(const R& r, const TruncationSet& S) {
    return {S, std::vector<typename R::Elem>(S.size(), r.zero())};
}

template <Ring R>
const typename R::Elem& witt_component(const WittVector<R>& w, std::uint64_t s) {
    return w.comp[w.S.index_of(s)];
}

template <Ring R>
bool witt_eq(const R& r, const WittVector<R>& a, const WittVector<R>& b) {
    if (a.S != b.S) return false;
    for (std::size_t i = 0; i < a.comp.size(); ++i)
        if (!r.eq(a.comp[i], b.comp[i])) return false;
    return true;
}

// [a] = (a, 0, 0, ...)
template <Ring R>
WittVector<R> teichmuller(const R& r, const TruncationSet& S, const typename R::Elem& a) {
    WittVector<R> w = witt_zero(r, S);
    if (!S.empty()) w.comp[S.index_of(1)] = a;
    return w;
}

template <Ring R>
WittVector<R> witt_one(const R& r, const TruncationSet& S) {
    return teichmuller(r, S, r.one());
}

// ---------------------------------------------------------------------------
// Ghost coordinates

template <Ring R>
typename R::Elem ghost_component(const R& r, const WittVector<R>& w, std::uint64_t s) {
    typename R::Elem acc = r.zero();
    for (std::uint64_t d : divisors_of(s)) {
        const auto& wd = witt_component(w, d); // d | s and s in S, so d in S
        if (r.is_zero(wd)) continue;
        acc = r.add(acc, r.mul(r.from_integer(BigInt(d)), ring_pow(r, wd, s / d)));
    }
    return acc;
}

template <Ring R>
std::vector<typename R::Elem> ghost(const R& r, const WittVector<R>& w) {
    std::vector<typename R::Elem> out;
    out.reserve(w.S.size());
    for (std::uint64_t s : w.S.elements()) out.push_back(ghost_component(r, w, s));
    return out;
}

// Solve the triangular ghost system for the coordinates. Faithful only over
// torsion-free rings; the divisions by the slot index must come out exact or
// the ghost tuple is not in the image.
template <Ring R>
WittVector<R> unghost(const R& r, const TruncationSet& S,
                      const std::vector<typename R::Elem>& ghosts) {
    if (!r.torsion_free())
        throw unsupported_ring("ghost coordinates cannot be inverted over " + r.name() +
                               ": the ring has additive torsion");
    if (ghosts.size() != S.size()) throw domain_error("ghost tuple has the wrong length");
    WittVector<R> w = witt_zero(r, S);
    const auto& slots = S.elements();
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const std::uint64_t s = slots[i];
        typename R::Elem acc = ghosts[i];
        for (std::uint64_t d : divisors_of(s)) {
            if (d == s) continue;
            const auto& wd = witt_component(w, d);
            if (r.is_zero(wd)) continue;
            acc = r.sub(acc, r.mul(r.from_integer(BigInt(d)), ring_pow(r, wd, s / d)));
        }
        try {
            w.comp[i] = r.divide_exact_int(acc, BigInt(s));
        } catch (const exact_division_error&) {
            throw not_in_ghost_image("ghost tuple is not integral at slot " + std::to_string(s));
        }
    }
    return w;
}

// ---------------------------------------------------------------------------
// Universal operation tables. The generic ghost machinery run over the ring
// of integer-coefficient polynomials in formal coordinates produces, once per
// (operation, truncation set), the classical universal polynomials; torsion
// rings evaluate those.

enum class WittOp { Add, Sub, Neg, Mul, Frob };

namespace detail {

inline std::uint32_t xvar(std::uint64_t slot) { return static_cast<std::uint32_t>(2 * slot); }
inline std::uint32_t yvar(std::uint64_t slot) { return static_cast<std::uint32_t>(2 * slot + 1); }

} // namespace detail

template <Ring R>
WittVector<R> witt_add(const R& r, const WittVector<R>& a, const WittVector<R>& b);
template <Ring R>
WittVector<R> witt_mul(const R& r, const WittVector<R>& a, const WittVector<R>& b);
template <Ring R>
WittVector<R> frobenius(const R& r, std::uint64_t n, const WittVector<R>& w);

inline const std::vector<SymPoly<BigInt>>& universal_table(WittOp op, std::uint64_t n,
                                                           const TruncationSet& S) {
    static std::map<std::string, std::vector<SymPoly<BigInt>>> cache;
    static std::mutex mutex;
    std::string key = std::to_string(static_cast<int>(op)) + "|" + std::to_string(n) + "|" +
                      S.to_string();
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    SymRing<BigInt> sym;
    WittVector<SymRing<BigInt>> x = witt_zero(sym, S);
    WittVector<SymRing<BigInt>> y = witt_zero(sym, S);
    const auto& slots = S.elements();
    for (std::size_t i = 0; i < slots.size(); ++i) {
        x.comp[i] = SymRing<BigInt>::var(detail::xvar(slots[i]));
        y.comp[i] = SymRing<BigInt>::var(detail::yvar(slots[i]));
    }
    WittVector<SymRing<BigInt>> res;
    switch (op) {
    case WittOp::Add: res = witt_add(sym, x, y); break;
    case WittOp::Sub: {
        auto gx = ghost(sym, x), gy = ghost(sym, y);
        for (std::size_t i = 0; i < gx.size(); ++i) gx[i] = sym.sub(gx[i], gy[i]);
        res = unghost(sym, S, gx);
        break;
    }
    case WittOp::Neg: {
        auto gx = ghost(sym, x);
        for (auto& g : gx) g = sym.neg(g);
        res = unghost(sym, S, gx);
        break;
    }
    case WittOp::Mul: res = witt_mul(sym, x, y); break;
    case WittOp::Frob: res = frobenius(sym, n, x); break;
    }
    return cache.emplace(std::move(key), std::move(res.comp)).first->second;
}

namespace detail {

template <Ring R>
WittVector<R> eval_binary_table(const R& r, WittOp op, const WittVector<R>& a,
                                const WittVector<R>& b) {
    const auto& table = universal_table(op, 0, a.S);
    WittVector<R> out = witt_zero(r, a.S);
    auto lookup = [&](std::uint32_t id) -> const typename R::Elem& {
        const std::uint64_t slot = id / 2;
        return (id % 2 == 0) ? witt_component(a, slot) : witt_component(b, slot);
    };
    for (std::size_t i = 0; i < table.size(); ++i)
        out.comp[i] = eval_sympoly(r, table[i], lookup);
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Arithmetic

template <Ring R>
WittVector<R> witt_add(const R& r, const WittVector<R>& a, const WittVector<R>& b) {
    if (a.S != b.S) throw domain_error("truncation set mismatch in addition");
    if (r.torsion_free()) {
        auto ga = ghost(r, a), gb = ghost(r, b);
        for (std::size_t i = 0; i < ga.size(); ++i) ga[i] = r.add(ga[i], gb[i]);
        return unghost(r, a.S, ga);
    }
    return detail::eval_binary_table(r, WittOp::Add, a, b);
}

template <Ring R>
WittVector<R> witt_sub(const R& r, const WittVector<R>& a, const WittVector<R>& b) {
    if (a.S != b.S) throw domain_error("truncation set mismatch in subtraction");
    if (r.torsion_free()) {
        auto ga = ghost(r, a), gb = ghost(r, b);
        for (std::size_t i = 0; i < ga.size(); ++i) ga[i] = r.sub(ga[i], gb[i]);
        return unghost(r, a.S, ga);
    }
    return detail::eval_binary_table(r, WittOp::Sub, a, b);
}

template <Ring R>
WittVector<R> witt_neg(const R& r, const WittVector<R>& a) {
    if (r.torsion_free()) {
        auto ga = ghost(r, a);
        for (auto& g : ga) g = r.neg(g);
        return unghost(r, a.S, ga);
    }
    const auto& table = universal_table(WittOp::Neg, 0, a.S);
    WittVector<R> out = witt_zero(r, a.S);
    auto lookup = [&](std::uint32_t id) -> const typename R::Elem& {
        return witt_component(a, id / 2);
    };
    for (std::size_t i = 0; i < table.size(); ++i) out.comp[i] = eval_sympoly(r, table[i], lookup);
    return out;
}

template <Ring R>
WittVector<R> witt_mul(const R& r, const WittVector<R>& a, const WittVector<R>& b) {
    if (a.S != b.S) throw domain_error("truncation set mismatch in multiplication");
    if (r.torsion_free()) {
        auto ga = ghost(r, a), gb = ghost(r, b);
        for (std::size_t i = 0; i < ga.size(); ++i) ga[i] = r.mul(ga[i], gb[i]);
        return unghost(r, a.S, ga);
    }
    return detail::eval_binary_table(r, WittOp::Mul, a, b);
}

// F_n : W_S -> W_{S/n}. On ghost coordinates gh_s(F_n w) = gh_{ns}(w).
template <Ring R>
WittVector<R> frobenius(const R& r, std::uint64_t n, const WittVector<R>& w) {
    if (n == 0) throw domain_error("Frobenius index must be positive");
    if (n == 1) return w;
    const TruncationSet Sq = quotient(w.S, n);
    if (r.torsion_free()) {
        std::vector<typename R::Elem> g;
        g.reserve(Sq.size());
        for (std::uint64_t s : Sq.elements()) g.push_back(ghost_component(r, w, s * n));
        return unghost(r, Sq, g);
    }
    const auto& table = universal_table(WittOp::Frob, n, w.S);
    WittVector<R> out = witt_zero(r, Sq);
    auto lookup = [&](std::uint32_t id) -> const typename R::Elem& {
        return witt_component(w, id / 2);
    };
    for (std::size_t i = 0; i < table.size(); ++i) out.comp[i] = eval_sympoly(r, table[i], lookup);
    return out;
}

// V_n : W_{S/n} -> W_S, (V_n w)_s = w_{s/n} when n | s, else 0. Additive.
template <Ring R>
WittVector<R> verschiebung(const R& r, std::uint64_t n, const WittVector<R>& w,
                           const TruncationSet& S) {
    if (n == 0) throw domain_error("Verschiebung index must be positive");
    if (quotient(S, n) != w.S)
        throw domain_error("Verschiebung source must live over " + quotient(S, n).to_string() +
                           ", got " + w.S.to_string());
    WittVector<R> out = witt_zero(r, S);
    const auto& slots = S.elements();
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (slots[i] % n == 0) out.comp[i] = witt_component(w, slots[i] / n);
    return out;
}

template <Ring R>
WittVector<R> restrict_to(const R& r, const WittVector<R>& w, const TruncationSet& T) {
    (void)r;
    if (!T.subset_of(w.S))
        throw domain_error("restriction target " + T.to_string() + " is not contained in " +
                           w.S.to_string());
    WittVector<R> out;
    out.S = T;
    out.comp.reserve(T.size());
    for (std::uint64_t s : T.elements()) out.comp.push_back(witt_component(w, s));
    return out;
}

// ---------------------------------------------------------------------------
// Integer images and their inverses

// m * 1 in W_S(Z), transported along Z -> A componentwise (naturality of the
// coordinate polynomials).
inline WittVector<IntegerRing> witt_int_z(const TruncationSet& S, const BigInt& m) {
    IntegerRing z;
    std::vector<BigInt> g(S.size(), m);
    return unghost(z, S, g);
}

template <Ring R>
WittVector<R> witt_int(const R& r, const TruncationSet& S, const BigInt& m) {
    WittVector<IntegerRing> wz = witt_int_z(S, m);
    WittVector<R> out = witt_zero(r, S);
    for (std::size_t i = 0; i < wz.comp.size(); ++i) out.comp[i] = r.from_integer(wz.comp[i]);
    return out;
}

// The Witt vector with constant ghost 1/n (the inverse of n*1 when n is
// invertible in the coefficient ring). Coordinates are rationals whose
// denominators only involve primes dividing n or the slot indices; each must
// be invertible in the target ring.
template <Ring R>
WittVector<R> witt_int_inverse(const R& r, const TruncationSet& S, std::uint64_t n) {
    if (n == 0) throw domain_error("no inverse of zero");
    RationalRing q;
    std::vector<BigRat> g(S.size(), BigRat(BigInt(1), BigInt(n)));
    WittVector<RationalRing> wq = unghost(q, S, g);
    WittVector<R> out = witt_zero(r, S);
    for (std::size_t i = 0; i < wq.comp.size(); ++i) out.comp[i] = r.from_rational(wq.comp[i]);
    return out;
}

template <Ring R>
WittVector<R> witt_scale_int(const R& r, const BigInt& m, const WittVector<R>& w) {
    return witt_mul(r, witt_int(r, w.S, m), w);
}

template <Ring R>
WittVector<R> witt_pow(const R& r, WittVector<R> base, std::uint64_t e) {
    WittVector<R> acc = witt_one(r, base.S);
    while (e) {
        if (e & 1) acc = witt_mul(r, acc, base);
        base = witt_mul(r, base, base);
        e >>= 1;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// The coefficient family expressing [1+x] - [1] through Verschiebungs: monic
// recursion n*x*f_n = (1+x)^n - 1 - sum_{d|n, d<n} d*(x*f_d)^(n/d), so that
// [1+x] = [1] + sum_{n in S} V_n([x*f_n(x)]) holds over Z[x].
inline std::vector<Poly<IntegerRing>> teichmuller_shift_family(const TruncationSet& S) {
    IntegerRing z;
    PolyRing<IntegerRing> zx(z, "x");
    std::map<std::uint64_t, Poly<IntegerRing>> f;
    for (std::uint64_t n : S.elements()) {
        // (1+x)^n - 1
        Poly<IntegerRing> acc = poly_pow(z, Poly<IntegerRing>{BigInt(1), BigInt(1)}, n);
        acc = poly_sub(z, acc, zx.one());
        for (std::uint64_t d : divisors_of(n)) {
            if (d == n) continue;
            // d * (x*f_d)^(n/d)
            Poly<IntegerRing> xf = poly_mul(z, zx.gen(), f.at(d));
            acc = poly_sub(z, acc, poly_scale(z, BigInt(d), poly_pow(z, xf, n / d)));
        }
        // divide by n*x
        if (!acc.empty() && !z.is_zero(acc[0]))
            throw exact_division_error("coefficient family: constant term should vanish");
        Poly<IntegerRing> shifted(acc.begin() + (acc.empty() ? 0 : 1), acc.end());
        f[n] = zx.divide_exact_int(shifted, BigInt(n));
    }
    std::vector<Poly<IntegerRing>> out;
    out.reserve(S.size());
    for (std::uint64_t n : S.elements()) out.push_back(f.at(n));
    return out;
}

} // namespace witt

#endif
