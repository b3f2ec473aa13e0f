#ifndef WITT_POLY_HPP
#define WITT_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "witt/error.hpp"
#include "witt/numeric.hpp"
#include "witt/rings.hpp"

namespace witt {

// Dense univariate polynomials over an arbitrary coefficient ring, stored
// low degree first with no trailing zeros. The free functions below are
// shared by PolyRing, the truncated power-series helpers, and the one-unit
// series code.

template <Ring R>
using Poly = std::vector<typename R::Elem>;

template <Ring R>
void poly_trim(const R& r, Poly<R>& f) {
    while (!f.empty() && r.is_zero(f.back())) f.pop_back();
}

// Deduce on the element type: Poly<R> is an alias, so R itself is not
// deducible from a bare polynomial argument.
template <class E>
long poly_deg(const std::vector<E>& f) {
    return static_cast<long>(f.size()) - 1; // -1 for the zero polynomial
}

template <class E>
bool poly_is_zero(const std::vector<E>& f) {
    return f.empty();
}

template <Ring R>
Poly<R> poly_const(const R& r, const typename R::Elem& c) {
    if (r.is_zero(c)) return {};
    return {c};
}

// c * x^k
template <Ring R>
Poly<R> poly_monomial(const R& r, const typename R::Elem& c, std::size_t k) {
    if (r.is_zero(c)) return {};
    Poly<R> f(k + 1, r.zero());
    f[k] = c;
    return f;
}

template <Ring R>
typename R::Elem poly_coeff(const R& r, const Poly<R>& f, std::size_t k) {
    return k < f.size() ? f[k] : r.zero();
}

template <Ring R>
Poly<R> poly_add(const R& r, const Poly<R>& a, const Poly<R>& b) {
    Poly<R> out(std::max(a.size(), b.size()), r.zero());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = r.add(out[i], b[i]);
    poly_trim(r, out);
    return out;
}

template <Ring R>
Poly<R> poly_neg(const R& r, const Poly<R>& a) {
    Poly<R> out = a;
    for (auto& c : out) c = r.neg(c);
    return out;
}

template <Ring R>
Poly<R> poly_sub(const R& r, const Poly<R>& a, const Poly<R>& b) {
    return poly_add(r, a, poly_neg(r, b));
}

template <Ring R>
Poly<R> poly_mul(const R& r, const Poly<R>& a, const Poly<R>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<R> out(a.size() + b.size() - 1, r.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (r.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = r.add(out[i + j], r.mul(a[i], b[j]));
    }
    poly_trim(r, out);
    return out;
}

// Product with only the coefficients of x^k for k < keep computed.
template <Ring R>
Poly<R> poly_mul(const R& r, const Poly<R>& a, const Poly<R>& b, std::size_t keep) {
    if (a.empty() || b.empty() || keep == 0) return {};
    Poly<R> out(std::min(a.size() + b.size() - 1, keep), r.zero());
    for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
        if (r.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j)
            out[i + j] = r.add(out[i + j], r.mul(a[i], b[j]));
    }
    poly_trim(r, out);
    return out;
}

template <Ring R>
Poly<R> poly_scale(const R& r, const typename R::Elem& c, const Poly<R>& a) {
    if (r.is_zero(c)) return {};
    Poly<R> out = a;
    for (auto& x : out) x = r.mul(c, x);
    poly_trim(r, out);
    return out;
}

template <Ring R>
bool poly_eq(const R& r, const Poly<R>& a, const Poly<R>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!r.eq(a[i], b[i])) return false;
    return true;
}

template <Ring R>
Poly<R> poly_pow(const R& r, Poly<R> base, std::uint64_t e) {
    Poly<R> acc = poly_const(r, r.one());
    while (e) {
        if (e & 1) acc = poly_mul(r, acc, base);
        base = poly_mul(r, base, base);
        e >>= 1;
    }
    return acc;
}

template <Ring R>
typename R::Elem poly_eval(const R& r, const Poly<R>& f, const typename R::Elem& x) {
    typename R::Elem acc = r.zero();
    for (std::size_t i = f.size(); i-- > 0;) acc = r.add(r.mul(acc, x), f[i]);
    return acc;
}

template <Ring R>
Poly<R> poly_derivative(const R& r, const Poly<R>& f) {
    if (f.size() <= 1) return {};
    Poly<R> out(f.size() - 1, r.zero());
    for (std::size_t i = 1; i < f.size(); ++i)
        out[i - 1] = r.mul(r.from_integer(BigInt(i)), f[i]);
    poly_trim(r, out);
    return out;
}

// Quotient and remainder; requires the leading coefficient of the divisor to
// be invertible in the coefficient ring.
template <RingWithInv R>
std::pair<Poly<R>, Poly<R>> poly_divmod(const R& r, Poly<R> num, const Poly<R>& den) {
    if (den.empty()) throw exact_division_error("polynomial division by zero");
    const auto lead_inv = r.inv(den.back());
    if (num.size() < den.size()) return {Poly<R>{}, std::move(num)};
    Poly<R> q(num.size() - den.size() + 1, r.zero());
    for (std::size_t i = num.size(); i-- >= den.size();) {
        if (!r.is_zero(num[i])) {
            const auto c = r.mul(num[i], lead_inv);
            q[i - den.size() + 1] = c;
            for (std::size_t j = 0; j < den.size(); ++j) {
                const std::size_t k = i - den.size() + 1 + j;
                num[k] = r.sub(num[k], r.mul(c, den[j]));
            }
        }
    }
    poly_trim(r, q);
    poly_trim(r, num);
    return {std::move(q), std::move(num)};
}

template <RingWithInv R>
Poly<R> poly_mod(const R& r, Poly<R> num, const Poly<R>& den) {
    return poly_divmod(r, std::move(num), den).second;
}

template <RingWithInv R>
Poly<R> poly_monic(const R& r, const Poly<R>& f) {
    if (f.empty()) return f;
    return poly_scale(r, r.inv(f.back()), f);
}

// Monic gcd over a field.
template <RingWithInv R>
Poly<R> poly_gcd(const R& r, Poly<R> a, Poly<R> b) {
    while (!b.empty()) {
        Poly<R> rem = poly_mod(r, std::move(a), b);
        a = std::move(b);
        b = std::move(rem);
    }
    return poly_monic(r, a);
}

template <Ring R>
std::string poly_to_string(const R& r, const Poly<R>& f, const std::string& var) {
    if (f.empty()) return "0";
    std::string out;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (r.is_zero(f[i])) continue;
        std::string c = r.to_string(f[i]);
        bool negative = !c.empty() && c[0] == '-';
        std::string mag = negative ? c.substr(1) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string term;
        if (i == 0) {
            term = parenthesize(mag);
        } else {
            std::string xp = i == 1 ? var : var + "^" + std::to_string(i);
            term = (mag == "1") ? xp : parenthesize(mag) + "*" + xp;
        }
        out += term;
    }
    return out;
}

// ---------------------------------------------------------------------------
// R[x] as a ring. Units are the invertible constants (the coefficient rings
// used here have no nonzero nilpotents).

template <Ring R>
class PolyRing {
public:
    using Base = R;
    using Elem = Poly<R>;

    PolyRing(R base, std::string var) : base_(std::move(base)), var_(std::move(var)) {}

    const R& base() const { return base_; }
    const std::string& var() const { return var_; }

    Elem zero() const { return {}; }
    Elem one() const { return {base_.one()}; }
    Elem gen() const { return poly_monomial(base_, base_.one(), 1); }
    Elem constant(const typename R::Elem& c) const { return poly_const(base_, c); }

    Elem add(const Elem& a, const Elem& b) const { return poly_add(base_, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return poly_sub(base_, a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return poly_mul(base_, a, b); }
    Elem neg(const Elem& a) const { return poly_neg(base_, a); }
    bool eq(const Elem& a, const Elem& b) const { return poly_eq(base_, a, b); }
    bool is_zero(const Elem& a) const { return a.empty(); }

    Elem from_integer(const BigInt& n) const { return constant(base_.from_integer(n)); }
    Elem from_rational(const BigRat& q) const { return constant(base_.from_rational(q)); }

    Elem divide_exact_int(const Elem& a, const BigInt& n) const {
        Elem out = a;
        for (auto& c : out) c = base_.divide_exact_int(c, n);
        return out;
    }

    Elem inv(const Elem& a) const
        requires RingWithInv<R>
    {
        if (a.size() != 1)
            throw not_invertible("not a unit of " + name() + ": " + to_string(a));
        return {base_.inv(a[0])};
    }

    BigInt characteristic() const { return base_.characteristic(); }
    bool torsion_free() const { return base_.torsion_free(); }
    bool is_field() const { return false; }
    std::string name() const { return "Poly(" + base_.name() + "," + var_ + ")"; }
    std::string to_string(const Elem& a) const { return poly_to_string(base_, a, var_); }

private:
    R base_;
    std::string var_;
};

} // namespace witt

#endif
