#ifndef WITT_NUMERIC_HPP
#define WITT_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

#include "witt/error.hpp"

namespace witt {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_den(const BigRat& q) { return boost::multiprecision::denominator(q); }

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt big_abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    return a / gcd_u64(a, b) * b;
}

// Exact integer quotient; throws when b does not divide a.
inline BigInt divide_exact(const BigInt& a, const BigInt& b, const char* what = "integer division") {
    if (b == 0) throw exact_division_error(std::string(what) + ": division by zero");
    BigInt q = a / b;
    if (q * b != a) throw exact_division_error(std::string(what) + ": not divisible");
    return q;
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    for (std::uint64_t d = 29; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

// p-adic valuation of n > 0.
inline int valuation(std::uint64_t n, std::uint64_t p) {
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

inline std::vector<std::uint64_t> prime_divisors_of(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// binomial(n, k) for n, k >= 0; zero when k > n.
inline BigInt binomial(const BigInt& n, const BigInt& k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    BigInt kk = k;
    if (n - k < kk) kk = n - k;
    for (BigInt i = 0; i < kk; ++i) {
        r = r * (n - i);
        r = divide_exact(r, i + 1, "binomial");
    }
    return r;
}

inline BigInt big_pow(BigInt base, std::uint64_t e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

} // namespace witt

#endif
