#ifndef WITT_RINGS_HPP
#define WITT_RINGS_HPP

#include <concepts>
#include <string>
#include <type_traits>

#include "witt/error.hpp"
#include "witt/numeric.hpp"

namespace witt {

// A ring is a value object describing a commutative ring with 1; its elements
// are plain values of type R::Elem in canonical form, so equality of values
// is equality of representations. All operations are pure.
template <class R>
concept Ring = std::copy_constructible<R> &&
    requires(const R& r, const typename R::Elem& a, const typename R::Elem& b, const BigInt& n) {
        typename R::Elem;
        { r.zero() } -> std::same_as<typename R::Elem>;
        { r.one() } -> std::same_as<typename R::Elem>;
        { r.add(a, b) } -> std::same_as<typename R::Elem>;
        { r.sub(a, b) } -> std::same_as<typename R::Elem>;
        { r.mul(a, b) } -> std::same_as<typename R::Elem>;
        { r.neg(a) } -> std::same_as<typename R::Elem>;
        { r.eq(a, b) } -> std::same_as<bool>;
        { r.is_zero(a) } -> std::same_as<bool>;
        { r.from_integer(n) } -> std::same_as<typename R::Elem>;
        { r.from_rational(BigRat()) } -> std::same_as<typename R::Elem>;
        { r.divide_exact_int(a, n) } -> std::same_as<typename R::Elem>;
        { r.characteristic() } -> std::same_as<BigInt>;
        { r.torsion_free() } -> std::same_as<bool>;
        { r.is_field() } -> std::same_as<bool>;
        { r.name() } -> std::same_as<std::string>;
        { r.to_string(a) } -> std::same_as<std::string>;
    };

template <class R>
concept RingWithInv = Ring<R> && requires(const R& r, const typename R::Elem& a) {
    { r.inv(a) } -> std::same_as<typename R::Elem>;
};

template <Ring R>
typename R::Elem ring_pow(const R& r, typename R::Elem base, std::uint64_t e) {
    typename R::Elem acc = r.one();
    while (e) {
        if (e & 1) acc = r.mul(acc, base);
        base = r.mul(base, base);
        e >>= 1;
    }
    return acc;
}

// a^e for signed e; negative exponents need an invertible base.
template <RingWithInv R>
typename R::Elem ring_pow_signed(const R& r, const typename R::Elem& base, std::int64_t e) {
    if (e >= 0) return ring_pow(r, base, static_cast<std::uint64_t>(e));
    return ring_pow(r, r.inv(base), static_cast<std::uint64_t>(-e));
}

// Wrap a subexpression in parentheses when it contains a top-level + or -.
inline std::string parenthesize(const std::string& s) {
    bool needs = false;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (depth == 0 && (c == '+' || (c == '-' && i > 0))) needs = true;
    }
    return needs ? "(" + s + ")" : s;
}

// ---------------------------------------------------------------------------
// Z

class IntegerRing {
public:
    using Elem = BigInt;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem from_integer(const BigInt& n) const { return n; }

    Elem from_rational(const BigRat& q) const {
        return witt::divide_exact(rat_num(q), rat_den(q), "Z from_rational");
    }

    Elem divide_exact_int(const Elem& a, const BigInt& n) const {
        return witt::divide_exact(a, n, "Z");
    }

    Elem inv(const Elem& a) const {
        if (a == 1 || a == -1) return a;
        throw not_invertible("not a unit of Z: " + a.str());
    }

    BigInt characteristic() const { return 0; }
    bool torsion_free() const { return true; }
    bool is_field() const { return false; }
    std::string name() const { return "Z"; }
    std::string to_string(const Elem& a) const { return a.str(); }
};

// ---------------------------------------------------------------------------
// Q

class RationalRing {
public:
    using Elem = BigRat;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem from_integer(const BigInt& n) const { return Elem(n); }
    Elem from_rational(const BigRat& q) const { return q; }

    Elem divide_exact_int(const Elem& a, const BigInt& n) const {
        if (n == 0) throw exact_division_error("Q: division by zero");
        return a / Elem(n);
    }

    Elem inv(const Elem& a) const {
        if (a == 0) throw not_invertible("division by zero in Q");
        return 1 / a;
    }

    BigInt characteristic() const { return 0; }
    bool torsion_free() const { return true; }
    bool is_field() const { return true; }
    std::string name() const { return "Q"; }

    std::string to_string(const Elem& a) const {
        if (rat_den(a) == 1) return rat_num(a).str();
        return rat_num(a).str() + "/" + rat_den(a).str();
    }
};

namespace detail {

// Inverse of a modulo n via extended Euclid; throws when gcd(a, n) != 1.
inline BigInt mod_inverse(const BigInt& a, const BigInt& n) {
    BigInt r0 = n, r1 = a % n, s0 = 0, s1 = 1;
    if (r1 < 0) r1 += n;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw not_invertible("residue " + a.str() + " not invertible mod " + n.str());
    s0 %= n;
    if (s0 < 0) s0 += n;
    return s0;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Z/n and F_p. Two kinds, one representation: canonical residues in [0, n).

class ModRing {
public:
    using Elem = BigInt;

    explicit ModRing(BigInt n) : n_(std::move(n)) {
        if (n_ < 2) throw domain_error("Zmod modulus must be >= 2");
    }

    const BigInt& modulus() const { return n_; }

    Elem zero() const { return 0; }
    Elem one() const { return n_ == 1 ? Elem(0) : Elem(1); }
    Elem add(const Elem& a, const Elem& b) const { return reduce(a + b); }
    Elem sub(const Elem& a, const Elem& b) const { return reduce(a - b); }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
    Elem neg(const Elem& a) const { return reduce(-a); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem from_integer(const BigInt& v) const { return reduce(v); }

    Elem from_rational(const BigRat& q) const {
        return mul(reduce(rat_num(q)), inv(reduce(rat_den(q))));
    }

    Elem divide_exact_int(const Elem& a, const BigInt& n) const {
        return mul(a, inv(reduce(n)));
    }

    Elem inv(const Elem& a) const { return detail::mod_inverse(a, n_); }

    BigInt characteristic() const { return n_; }
    bool torsion_free() const { return false; }
    bool is_field() const { return false; }
    std::string name() const { return "Zmod:" + n_.str(); }
    std::string to_string(const Elem& a) const { return a.str(); }

    Elem reduce(const BigInt& v) const {
        BigInt r = v % n_;
        if (r < 0) r += n_;
        return r;
    }

private:
    BigInt n_;
};

class PrimeFieldRing {
public:
    using Elem = BigInt;

    explicit PrimeFieldRing(BigInt p) : p_(std::move(p)) {
        if (p_ < 2 || p_ > 0xffffffffull || !is_prime_u64(p_.convert_to<std::uint64_t>()))
            throw domain_error("Fp modulus must be a prime (got " + p_.str() + ")");
    }

    const BigInt& modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(const Elem& a, const Elem& b) const { return reduce(a + b); }
    Elem sub(const Elem& a, const Elem& b) const { return reduce(a - b); }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
    Elem neg(const Elem& a) const { return reduce(-a); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem from_integer(const BigInt& v) const { return reduce(v); }

    Elem from_rational(const BigRat& q) const {
        return mul(reduce(rat_num(q)), inv(reduce(rat_den(q))));
    }

    Elem divide_exact_int(const Elem& a, const BigInt& n) const {
        return mul(a, inv(reduce(n)));
    }

    Elem inv(const Elem& a) const { return detail::mod_inverse(a, p_); }

    BigInt characteristic() const { return p_; }
    bool torsion_free() const { return false; }
    bool is_field() const { return true; }
    std::string name() const { return "Fp:" + p_.str(); }
    std::string to_string(const Elem& a) const { return a.str(); }

    Elem reduce(const BigInt& v) const {
        BigInt r = v % p_;
        if (r < 0) r += p_;
        return r;
    }

private:
    BigInt p_;
};

template <Ring A, Ring B>
bool same_ring(const A& a, const B& b) {
    return a.name() == b.name();
}

} // namespace witt

#endif
