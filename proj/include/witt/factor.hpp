#ifndef WITT_FACTOR_HPP
#define WITT_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "witt/error.hpp"
#include "witt/numeric.hpp"
#include "witt/poly.hpp"
#include "witt/rings.hpp"
#include "witt/rng.hpp"

namespace witt {

template <Ring K>
struct PolyFactor {
    Poly<K> poly;          // monic
    unsigned multiplicity = 1;
};

template <Ring K>
struct Factorization {
    typename K::Elem unit; // f = unit * prod(poly^multiplicity)
    std::vector<PolyFactor<K>> factors;
};

template <RingWithInv R>
Poly<R> poly_powmod(const R& r, Poly<R> base, BigInt e, const Poly<R>& mod) {
    Poly<R> acc = poly_mod(r, poly_const(r, r.one()), mod);
    base = poly_mod(r, std::move(base), mod);
    while (e > 0) {
        if ((e & 1) != 0) acc = poly_mod(r, poly_mul(r, acc, base), mod);
        base = poly_mod(r, poly_mul(r, base, base), mod);
        e >>= 1;
    }
    return acc;
}

// Extended Euclid over a field: returns (g, s, t) with s*a + t*b = g, g monic.
template <RingWithInv R>
std::tuple<Poly<R>, Poly<R>, Poly<R>> poly_ext_gcd(const R& r, Poly<R> a, Poly<R> b) {
    Poly<R> s0 = poly_const(r, r.one()), s1{};
    Poly<R> t0{}, t1 = poly_const(r, r.one());
    while (!b.empty()) {
        auto [q, rem] = poly_divmod(r, std::move(a), b);
        a = std::move(b);
        b = std::move(rem);
        Poly<R> s2 = poly_sub(r, s0, poly_mul(r, q, s1));
        s0 = std::move(s1); s1 = std::move(s2);
        Poly<R> t2 = poly_sub(r, t0, poly_mul(r, q, t1));
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (a.empty()) return {a, s0, t0};
    const auto c = r.inv(a.back());
    return {poly_scale(r, c, a), poly_scale(r, c, s0), poly_scale(r, c, t0)};
}

namespace detail {

// Canonical ordering of monic factors: by degree, then coefficient string.
template <Ring K>
void sort_factors(const K& k, std::vector<PolyFactor<K>>& v) {
    std::sort(v.begin(), v.end(), [&](const PolyFactor<K>& x, const PolyFactor<K>& y) {
        if (x.poly.size() != y.poly.size()) return x.poly.size() < y.poly.size();
        return poly_to_string(k, x.poly, "x") < poly_to_string(k, y.poly, "x");
    });
}

// --- factorization over F_p ------------------------------------------------

// Coefficientwise p-th root: over F_p, (sum b_j x^j)^p = sum b_j x^{jp}.
inline Poly<PrimeFieldRing> fp_pth_root(const PrimeFieldRing& k, const Poly<PrimeFieldRing>& f) {
    const std::uint64_t p = k.modulus().convert_to<std::uint64_t>();
    Poly<PrimeFieldRing> out(f.size() / p + 1, k.zero());
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (k.is_zero(f[j])) continue;
        if (j % p != 0) throw domain_error("polynomial is not a p-th power");
        out[j / p] = f[j];
    }
    poly_trim(k, out);
    return out;
}

// Squarefree decomposition of a monic polynomial over F_p.
inline std::vector<std::pair<Poly<PrimeFieldRing>, unsigned>>
fp_squarefree(const PrimeFieldRing& k, Poly<PrimeFieldRing> f, unsigned outer_mult = 1) {
    std::vector<std::pair<Poly<PrimeFieldRing>, unsigned>> out;
    if (poly_deg(f) < 1) return out;
    const std::uint64_t p = k.modulus().convert_to<std::uint64_t>();
    Poly<PrimeFieldRing> fp = poly_derivative(k, f);
    if (fp.empty()) {
        // f = g(x^p) = (root of g)^p
        auto sub = fp_squarefree(k, fp_pth_root(k, f), outer_mult * static_cast<unsigned>(p));
        out.insert(out.end(), sub.begin(), sub.end());
        return out;
    }
    Poly<PrimeFieldRing> c = poly_gcd(k, f, fp);
    Poly<PrimeFieldRing> w = poly_divmod(k, f, c).first;
    unsigned i = 1;
    while (poly_deg(w) > 0) {
        Poly<PrimeFieldRing> y = poly_gcd(k, w, c);
        Poly<PrimeFieldRing> z = poly_divmod(k, w, y).first;
        if (poly_deg(z) > 0) out.emplace_back(poly_monic(k, z), outer_mult * i);
        c = poly_divmod(k, c, y).first;
        w = std::move(y);
        ++i;
    }
    if (poly_deg(c) > 0) {
        auto sub = fp_squarefree(k, fp_pth_root(k, c), outer_mult * static_cast<unsigned>(p));
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

inline Poly<PrimeFieldRing> fp_random_poly(const PrimeFieldRing& k, Rng& rng, std::size_t deg_below) {
    const std::uint64_t p = k.modulus().convert_to<std::uint64_t>();
    Poly<PrimeFieldRing> a(deg_below, k.zero());
    for (auto& c : a) c = BigInt(rng.below(p));
    poly_trim(k, a);
    return a;
}

// Equal-degree splitting (Cantor-Zassenhaus; trace map for p = 2) of a monic
// squarefree product of irreducibles all of degree d.
inline void fp_equal_degree(const PrimeFieldRing& k, const Poly<PrimeFieldRing>& f, std::size_t d,
                            Rng& rng, std::vector<Poly<PrimeFieldRing>>& out) {
    const std::size_t n = static_cast<std::size_t>(poly_deg(f));
    if (n == d) {
        out.push_back(poly_monic(k, f));
        return;
    }
    const BigInt p = k.modulus();
    for (;;) {
        Poly<PrimeFieldRing> a = fp_random_poly(k, rng, n);
        if (poly_deg(a) < 1) continue;
        Poly<PrimeFieldRing> g = poly_gcd(k, a, f);
        if (poly_deg(g) <= 0 || g.size() == f.size()) {
            Poly<PrimeFieldRing> b;
            if (p == 2) {
                // b = a + a^2 + a^4 + ... + a^(2^(d-1)) mod f
                b = poly_mod(k, a, f);
                Poly<PrimeFieldRing> t = b;
                for (std::size_t i = 1; i < d; ++i) {
                    t = poly_mod(k, poly_mul(k, t, t), f);
                    b = poly_add(k, b, t);
                }
            } else {
                const BigInt e = (big_pow(p, static_cast<std::uint64_t>(d)) - 1) / 2;
                b = poly_powmod(k, a, e, f);
                b = poly_sub(k, b, poly_const(k, k.one()));
            }
            g = poly_gcd(k, b, f);
        }
        if (poly_deg(g) > 0 && g.size() < f.size()) {
            fp_equal_degree(k, g, d, rng, out);
            fp_equal_degree(k, poly_divmod(k, f, g).first, d, rng, out);
            return;
        }
    }
}

// Distinct-degree factorization of a monic squarefree polynomial.
inline void fp_distinct_degree(const PrimeFieldRing& k, Poly<PrimeFieldRing> f, Rng& rng,
                               std::vector<Poly<PrimeFieldRing>>& out) {
    const BigInt p = k.modulus();
    Poly<PrimeFieldRing> x = poly_monomial(k, k.one(), 1);
    Poly<PrimeFieldRing> h = poly_mod(k, x, f);
    std::size_t d = 0;
    while (poly_deg(f) > 0) {
        ++d;
        if (2 * d > static_cast<std::size_t>(poly_deg(f))) {
            out.push_back(poly_monic(k, f)); // the remainder is irreducible
            return;
        }
        h = poly_powmod(k, h, p, f); // h = x^(p^d) mod f
        Poly<PrimeFieldRing> g = poly_gcd(k, poly_sub(k, h, x), f);
        if (poly_deg(g) > 0) {
            fp_equal_degree(k, g, d, rng, out);
            f = poly_divmod(k, f, g).first;
            h = poly_mod(k, h, f);
        }
    }
}

} // namespace detail

inline Factorization<PrimeFieldRing> factor_poly(const PrimeFieldRing& k,
                                                 const Poly<PrimeFieldRing>& f) {
    if (f.empty()) throw domain_error("cannot factor the zero polynomial");
    Factorization<PrimeFieldRing> out;
    out.unit = f.back();
    if (poly_deg(f) == 0) return out;
    // The random choices below are derived from the input, so the result is a
    // pure function of (p, f).
    Rng rng(0x77697474666163u);
    rng = rng.fork(k.name() + "|" + poly_to_string(k, f, "x"));
    Poly<PrimeFieldRing> fm = poly_monic(k, f);
    for (auto& [g, mult] : detail::fp_squarefree(k, std::move(fm))) {
        std::vector<Poly<PrimeFieldRing>> irr;
        detail::fp_distinct_degree(k, g, rng, irr);
        for (auto& h : irr) out.factors.push_back({std::move(h), mult});
    }
    detail::sort_factors(k, out.factors);
    return out;
}

namespace detail {

// --- factorization over Q (Zassenhaus) --------------------------------------

// Yun's squarefree decomposition over a field of characteristic zero.
template <RingWithInv K>
std::vector<std::pair<Poly<K>, unsigned>> yun_squarefree(const K& k, const Poly<K>& f) {
    std::vector<std::pair<Poly<K>, unsigned>> out;
    if (poly_deg(f) < 1) return out;
    Poly<K> fp = poly_derivative(k, f);
    Poly<K> u = poly_gcd(k, f, fp);
    Poly<K> v = poly_divmod(k, f, u).first;
    Poly<K> w = poly_divmod(k, fp, u).first;
    unsigned i = 1;
    while (poly_deg(v) > 0) {
        Poly<K> h = poly_gcd(k, v, poly_sub(k, w, poly_derivative(k, v)));
        Poly<K> v2 = poly_divmod(k, v, h).first;
        Poly<K> w2 = poly_divmod(k, poly_sub(k, w, poly_derivative(k, v)), h).first;
        if (poly_deg(h) > 0) out.emplace_back(poly_monic(k, h), i);
        v = std::move(v2);
        w = std::move(w2);
        ++i;
    }
    return out;
}

inline BigInt poly_content_z(const Poly<IntegerRing>& f) {
    BigInt g = 0;
    for (const auto& c : f) g = big_gcd(g, c);
    return g == 0 ? BigInt(1) : g;
}

inline Poly<IntegerRing> centered_mod(const Poly<IntegerRing>& f, const BigInt& m) {
    Poly<IntegerRing> out = f;
    for (auto& c : out) {
        c %= m;
        if (c < 0) c += m;
        if (2 * c > m) c -= m;
    }
    IntegerRing z;
    poly_trim(z, out);
    return out;
}

inline Poly<IntegerRing> reduce_mod(const Poly<IntegerRing>& f, const BigInt& m) {
    Poly<IntegerRing> out = f;
    for (auto& c : out) {
        c %= m;
        if (c < 0) c += m;
    }
    IntegerRing z;
    poly_trim(z, out);
    return out;
}

// One linear Hensel step chain: lift f = g0*h0 (mod p) to f = g*h (mod p^steps),
// f and both factors monic. Returns canonical representatives mod p^steps.
inline std::pair<Poly<IntegerRing>, Poly<IntegerRing>>
hensel_pair(const Poly<IntegerRing>& f, const Poly<PrimeFieldRing>& g0,
            const Poly<PrimeFieldRing>& h0, const PrimeFieldRing& kp, unsigned steps) {
    IntegerRing z;
    const BigInt p = kp.modulus();
    auto [one, sigma, tau] = poly_ext_gcd(kp, g0, h0);
    if (poly_deg(one) != 0) throw domain_error("Hensel lifting requires coprime factors");
    Poly<IntegerRing> g = g0, h = h0; // canonical residues are already integers
    BigInt m = p;
    for (unsigned j = 1; j < steps; ++j) {
        Poly<IntegerRing> diff = poly_sub(z, f, poly_mul(z, g, h));
        Poly<IntegerRing> e(diff.size());
        for (std::size_t i = 0; i < diff.size(); ++i)
            e[i] = witt::divide_exact(diff[i], m, "Hensel");
        Poly<PrimeFieldRing> ebar = reduce_mod(e, p);
        auto [q, u] = poly_divmod(kp, poly_mul(kp, tau, ebar), g0);
        // v = sigma*ebar + q*h0 satisfies u*h0 + v*g0 = ebar with deg v < deg h0.
        Poly<PrimeFieldRing> v = poly_add(kp, poly_mul(kp, sigma, ebar), poly_mul(kp, q, h0));
        g = poly_add(z, g, poly_scale(z, m, Poly<IntegerRing>(u)));
        h = poly_add(z, h, poly_scale(z, m, Poly<IntegerRing>(v)));
        m *= p;
    }
    return {reduce_mod(g, m), reduce_mod(h, m)};
}

// Lift a list of pairwise-coprime monic factors of f mod p to factors mod p^steps.
inline std::vector<Poly<IntegerRing>>
hensel_lift_list(const Poly<IntegerRing>& f, const std::vector<Poly<PrimeFieldRing>>& factors,
                 const PrimeFieldRing& kp, unsigned steps, const BigInt& modulus) {
    if (factors.size() == 1) return {reduce_mod(f, modulus)};
    const std::size_t half = factors.size() / 2;
    std::vector<Poly<PrimeFieldRing>> left(factors.begin(), factors.begin() + half);
    std::vector<Poly<PrimeFieldRing>> right(factors.begin() + half, factors.end());
    Poly<PrimeFieldRing> g0 = poly_const(kp, kp.one());
    for (const auto& q : left) g0 = poly_mul(kp, g0, q);
    Poly<PrimeFieldRing> h0 = poly_const(kp, kp.one());
    for (const auto& q : right) h0 = poly_mul(kp, h0, q);
    auto [g, h] = hensel_pair(f, g0, h0, kp, steps);
    auto out = hensel_lift_list(g, left, kp, steps, modulus);
    auto rest = hensel_lift_list(h, right, kp, steps, modulus);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

// Factor a monic squarefree integer polynomial into monic irreducibles over Z.
inline std::vector<Poly<IntegerRing>> factor_monic_squarefree_z(Poly<IntegerRing> g) {
    IntegerRing z;
    if (poly_deg(g) <= 1) return {std::move(g)};

    // Pick an odd prime keeping g squarefree mod p.
    std::uint64_t pu = 3;
    for (;;) {
        if (is_prime_u64(pu)) {
            PrimeFieldRing kp{BigInt(pu)};
            Poly<PrimeFieldRing> gbar = reduce_mod(g, kp.modulus());
            if (gbar.size() == g.size()) { // degree preserved (monic, always true)
                Poly<PrimeFieldRing> d = poly_derivative(kp, gbar);
                if (!d.empty() && poly_deg(poly_gcd(kp, gbar, d)) == 0) break;
            }
        }
        ++pu;
        if (pu > 10000) throw domain_error("no suitable prime for factorization");
    }
    PrimeFieldRing kp{BigInt(pu)};

    auto modular = factor_poly(kp, reduce_mod(g, kp.modulus()));
    if (modular.factors.size() == 1) return {std::move(g)};
    std::vector<Poly<PrimeFieldRing>> pool0;
    for (auto& fac : modular.factors) pool0.push_back(std::move(fac.poly));

    // Landau-Mignotte bound: coefficients of any monic factor are bounded by
    // 2^deg * l2norm(g).
    BigInt norm2 = 0;
    for (const auto& c : g) norm2 += c * c;
    BigInt bound = (boost::multiprecision::sqrt(norm2) + 1) << static_cast<unsigned>(poly_deg(g));
    unsigned steps = 1;
    BigInt modulus = kp.modulus();
    while (modulus <= 2 * bound) {
        modulus *= kp.modulus();
        ++steps;
    }

    std::vector<Poly<IntegerRing>> pool = hensel_lift_list(g, pool0, kp, steps, modulus);
    ModRing zm{modulus};

    std::vector<Poly<IntegerRing>> out;
    Poly<IntegerRing> rem = std::move(g);
    bool progress = true;
    while (progress && pool.size() > 1 && poly_deg(rem) > 0) {
        progress = false;
        for (std::size_t s = 1; !progress && 2 * s <= pool.size(); ++s) {
            for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << pool.size()); ++mask) {
                if (static_cast<std::size_t>(__builtin_popcountll(mask)) != s) continue;
                Poly<ModRing> cand = poly_const(zm, zm.one());
                for (std::size_t i = 0; i < pool.size(); ++i)
                    if (mask & (std::uint64_t(1) << i)) cand = poly_mul(zm, cand, pool[i]);
                Poly<IntegerRing> c = centered_mod(cand, modulus);
                auto [quo, rr] = poly_divmod(z, rem, c);
                if (rr.empty()) {
                    out.push_back(std::move(c));
                    rem = std::move(quo);
                    std::vector<Poly<IntegerRing>> keep;
                    for (std::size_t i = 0; i < pool.size(); ++i)
                        if (!(mask & (std::uint64_t(1) << i))) keep.push_back(std::move(pool[i]));
                    pool = std::move(keep);
                    progress = true;
                    break;
                }
            }
        }
    }
    if (poly_deg(rem) > 0) out.push_back(std::move(rem));
    return out;
}

} // namespace detail

inline Factorization<RationalRing> factor_poly(const RationalRing& k, const Poly<RationalRing>& f) {
    if (f.empty()) throw domain_error("cannot factor the zero polynomial");
    Factorization<RationalRing> out;
    out.unit = f.back();
    if (poly_deg(f) == 0) return out;
    Poly<RationalRing> fm = poly_monic(k, f);
    for (auto& [g, mult] : detail::yun_squarefree(k, fm)) {
        // Clear denominators to a primitive integer polynomial with positive lead.
        BigInt den = 1;
        for (const auto& c : g) den = den / big_gcd(den, rat_den(c)) * rat_den(c);
        Poly<IntegerRing> gi(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            gi[i] = rat_num(g[i]) * (den / rat_den(g[i]));
        BigInt cont = detail::poly_content_z(gi);
        for (auto& c : gi) c = witt::divide_exact(c, cont, "content");

        // Monicize: if lead = L, factor L^(d-1) * g(x/L), a monic integer poly.
        const BigInt L = gi.back();
        const std::size_t d = gi.size() - 1;
        Poly<IntegerRing> mono(gi.size());
        for (std::size_t i = 0; i < gi.size(); ++i)
            mono[i] = gi[i] * big_pow(L, static_cast<std::uint64_t>(d >= i + 1 ? d - 1 - i : 0));
        if (d >= 1) mono[d] = 1; // L^(d-1-d) would be L^-1; the lead is exactly 1

        for (auto& h : detail::factor_monic_squarefree_z(std::move(mono))) {
            // Undo the substitution: factor of g is primitive part of h(L*x), monic over Q.
            Poly<IntegerRing> hs(h.size());
            for (std::size_t i = 0; i < h.size(); ++i)
                hs[i] = h[i] * big_pow(L, static_cast<std::uint64_t>(i));
            BigInt c2 = detail::poly_content_z(hs);
            Poly<RationalRing> hq(hs.size());
            for (std::size_t i = 0; i < hs.size(); ++i)
                hq[i] = BigRat(witt::divide_exact(hs[i], c2, "content"));
            out.factors.push_back({poly_monic(k, hq), mult});
        }
    }
    detail::sort_factors(k, out.factors);
    return out;
}

template <Ring K>
bool poly_is_irreducible(const K& k, const Poly<K>& f) {
    if (poly_deg(f) < 1) return false;
    auto fac = factor_poly(k, f);
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

} // namespace witt

#endif
