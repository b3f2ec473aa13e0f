#ifndef WITT_SYMPOLY_HPP
#define WITT_SYMPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "witt/error.hpp"
#include "witt/numeric.hpp"
#include "witt/rings.hpp"

namespace witt {

// Sparse multivariate polynomials with exact coefficients (BigInt or BigRat),
// used to build universal formulas once and evaluate them over arbitrary
// coefficient rings. A monomial maps variable ids to positive exponents.
using SymMono = std::vector<std::pair<std::uint32_t, std::uint32_t>>; // sorted by id

template <class C>
struct SymPoly {
    std::map<SymMono, C> terms; // no zero coefficients
};

namespace detail {

inline SymMono mono_mul(const SymMono& a, const SymMono& b) {
    SymMono out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) out.push_back(a[i++]);
        else if (a[i].first > b[j].first) out.push_back(b[j++]);
        else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

template <class C>
void add_term(SymPoly<C>& p, const SymMono& m, const C& c) {
    if (c == 0) return;
    auto [it, inserted] = p.terms.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.terms.erase(it);
    }
}

inline BigInt coeff_divide_exact(const BigInt& a, const BigInt& n) {
    return witt::divide_exact(a, n, "universal formula");
}
inline BigRat coeff_divide_exact(const BigRat& a, const BigInt& n) {
    if (n == 0) throw exact_division_error("division by zero in universal formula");
    return a / BigRat(n);
}

inline BigInt coeff_from_rational(const BigRat& q, const BigInt*) {
    return witt::divide_exact(rat_num(q), rat_den(q), "integer-coefficient formula");
}
inline BigRat coeff_from_rational(const BigRat& q, const BigRat*) { return q; }

} // namespace detail

template <class C>
SymPoly<C> sym_add(const SymPoly<C>& a, const SymPoly<C>& b) {
    SymPoly<C> out = a;
    for (const auto& [m, c] : b.terms) detail::add_term(out, m, c);
    return out;
}

template <class C>
SymPoly<C> sym_neg(const SymPoly<C>& a) {
    SymPoly<C> out = a;
    for (auto& [m, c] : out.terms) c = -c;
    return out;
}

template <class C>
SymPoly<C> sym_sub(const SymPoly<C>& a, const SymPoly<C>& b) {
    return sym_add(a, sym_neg(b));
}

template <class C>
SymPoly<C> sym_mul(const SymPoly<C>& a, const SymPoly<C>& b) {
    SymPoly<C> out;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms)
            detail::add_term(out, detail::mono_mul(ma, mb), C(ca * cb));
    return out;
}

// The ring of such polynomials; satisfies the Ring concept, is torsion-free,
// and divides coefficients exactly, so the generic ghost-coordinate machinery
// runs over it unchanged. That is how universal tables are produced.
template <class C>
class SymRing {
public:
    using Elem = SymPoly<C>;

    Elem zero() const { return {}; }
    Elem one() const { return from_integer(1); }

    static Elem var(std::uint32_t id) {
        Elem p;
        p.terms.emplace(SymMono{{id, 1}}, C(1));
        return p;
    }

    Elem add(const Elem& a, const Elem& b) const { return sym_add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return sym_sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return sym_mul(a, b); }
    Elem neg(const Elem& a) const { return sym_neg(a); }
    bool eq(const Elem& a, const Elem& b) const { return a.terms == b.terms; }
    bool is_zero(const Elem& a) const { return a.terms.empty(); }

    Elem from_integer(const BigInt& n) const {
        Elem p;
        if (n != 0) p.terms.emplace(SymMono{}, C(n));
        return p;
    }

    Elem from_rational(const BigRat& q) const {
        Elem p;
        C c = detail::coeff_from_rational(q, static_cast<const C*>(nullptr));
        if (c != 0) p.terms.emplace(SymMono{}, std::move(c));
        return p;
    }

    Elem divide_exact_int(const Elem& a, const BigInt& n) const {
        Elem out;
        for (const auto& [m, c] : a.terms)
            out.terms.emplace(m, detail::coeff_divide_exact(c, n));
        return out;
    }

    BigInt characteristic() const { return 0; }
    bool torsion_free() const { return true; }
    bool is_field() const { return false; }
    std::string name() const { return "Sym"; }

    std::string to_string(const Elem& a) const {
        if (a.terms.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : a.terms) {
            if (!out.empty()) out += " + ";
            bool first = true;
            std::string cs;
            if constexpr (std::is_same_v<C, BigInt>) cs = c.str();
            else cs = rat_den(c) == 1 ? rat_num(c).str() : rat_num(c).str() + "/" + rat_den(c).str();
            if (m.empty() || cs != "1") {
                out += cs;
                first = false;
            }
            for (const auto& [id, e] : m) {
                if (!first) out += "*";
                first = false;
                out += "v" + std::to_string(id);
                if (e > 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }
};

// Evaluate a universal polynomial over a ring. Variables are supplied by
// `lookup` (id -> element). Terms containing a variable whose value is an
// exact zero are skipped entirely; power results are cached across terms.
template <Ring R, class C, class Lookup>
typename R::Elem eval_sympoly(const R& r, const SymPoly<C>& p, Lookup&& lookup) {
    using Elem = typename R::Elem;
    std::unordered_map<std::uint64_t, Elem> powers;
    Elem acc = r.zero();
    for (const auto& [mono, coeff] : p.terms) {
        bool dead = false;
        for (const auto& [id, e] : mono) {
            (void)e;
            if (r.is_zero(lookup(id))) {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        Elem term = [&]() -> Elem {
            if constexpr (std::is_same_v<C, BigInt>) return r.from_integer(coeff);
            else return r.from_rational(coeff);
        }();
        for (const auto& [id, e] : mono) {
            const std::uint64_t key = (static_cast<std::uint64_t>(id) << 16) | e;
            auto it = powers.find(key);
            if (it == powers.end())
                it = powers.emplace(key, ring_pow(r, lookup(id), e)).first;
            term = r.mul(term, it->second);
        }
        acc = r.add(acc, term);
    }
    return acc;
}

} // namespace witt

#endif
