#ifndef WITT_RATFUNC_HPP
#define WITT_RATFUNC_HPP

#include <string>
#include <utility>

#include "witt/error.hpp"
#include "witt/poly.hpp"
#include "witt/rings.hpp"

namespace witt {

// Reduced fraction of polynomials: den monic, gcd(num, den) = 1, zero = 0/1.
template <RingWithInv K>
struct RatFunc {
    Poly<K> num;
    Poly<K> den;
};

// The field K(x) of rational functions over a field K.
template <RingWithInv K>
class RatFuncRing {
public:
    using Base = K;
    using Elem = RatFunc<K>;

    RatFuncRing(K base, std::string var) : base_(std::move(base)), var_(std::move(var)) {
        if (!base_.is_field()) throw unsupported_ring("RatFunc needs a field of coefficients");
    }

    const K& base() const { return base_; }
    const std::string& var() const { return var_; }

    Elem zero() const { return {{}, unit_den()}; }
    Elem one() const { return {{base_.one()}, unit_den()}; }
    Elem gen() const { return {poly_monomial(base_, base_.one(), 1), unit_den()}; }
    Elem constant(const typename K::Elem& c) const { return {poly_const(base_, c), unit_den()}; }
    Elem from_poly(Poly<K> f) const { return make(std::move(f), unit_den()); }

    Elem make(Poly<K> num, Poly<K> den) const {
        if (den.empty()) throw exact_division_error("rational function with zero denominator");
        if (num.empty()) return zero();
        Poly<K> g = poly_gcd(base_, num, den);
        if (poly_deg(g) > 0) {
            num = poly_divmod(base_, std::move(num), g).first;
            den = poly_divmod(base_, std::move(den), g).first;
        }
        const auto lead_inv = base_.inv(den.back());
        return {poly_scale(base_, lead_inv, num), poly_scale(base_, lead_inv, den)};
    }

    Elem add(const Elem& a, const Elem& b) const {
        return make(poly_add(base_, poly_mul(base_, a.num, b.den), poly_mul(base_, b.num, a.den)),
                    poly_mul(base_, a.den, b.den));
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem mul(const Elem& a, const Elem& b) const {
        return make(poly_mul(base_, a.num, b.num), poly_mul(base_, a.den, b.den));
    }
    Elem neg(const Elem& a) const { return {poly_neg(base_, a.num), a.den}; }
    bool eq(const Elem& a, const Elem& b) const {
        return poly_eq(base_, a.num, b.num) && poly_eq(base_, a.den, b.den);
    }
    bool is_zero(const Elem& a) const { return a.num.empty(); }

    Elem inv(const Elem& a) const {
        if (a.num.empty()) throw not_invertible("division by zero in " + name());
        return make(a.den, a.num);
    }

    Elem from_integer(const BigInt& n) const { return constant(base_.from_integer(n)); }
    Elem from_rational(const BigRat& q) const { return constant(base_.from_rational(q)); }
    Elem divide_exact_int(const Elem& a, const BigInt& n) const {
        const auto c = base_.from_integer(n);
        if (base_.is_zero(c)) throw not_invertible("division by " + n.str() + " in " + name());
        return {poly_scale(base_, base_.inv(c), a.num), a.den};
    }

    BigInt characteristic() const { return base_.characteristic(); }
    bool torsion_free() const { return base_.characteristic() == 0; }
    bool is_field() const { return true; }
    std::string name() const { return "RatFunc(" + base_.name() + "," + var_ + ")"; }

    std::string to_string(const Elem& a) const {
        std::string n = poly_to_string(base_, a.num, var_);
        if (poly_deg(a.den) == 0 && base_.eq(a.den[0], base_.one())) return n;
        return parenthesize(n) + "/" + parenthesize(poly_to_string(base_, a.den, var_));
    }

private:
    Poly<K> unit_den() const { return {base_.one()}; }
    K base_;
    std::string var_;
};

} // namespace witt

#endif
