#ifndef WITT_LAURENT_HPP
#define WITT_LAURENT_HPP

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "witt/error.hpp"
#include "witt/rings.hpp"

namespace witt {

// Exponent bound marking an exact (untruncated) Laurent window.
inline constexpr long kInfPrec = std::numeric_limits<long>::max() / 4;

// A "window" on a Laurent series: the coefficients of t^(lo+i) for
// 0 <= i < coeffs.size() are stored, coefficients at other exponents below
// `prec` are known to be zero, and everything from exponent `prec` on is
// unknown. prec == kInfPrec means the element is an exact Laurent polynomial.
// Canonical form: no zero coefficients at either end, nothing stored at or
// above prec, and lo == 0 when coeffs is empty.
template <class E>
struct LaurentWindow {
    long lo = 0;
    std::vector<E> coeffs;
    long prec = kInfPrec;
};

inline long prec_add(long a, long b) {
    if (a >= kInfPrec || b >= kInfPrec) return kInfPrec;
    return a + b;
}

inline long div_floor(long a, long b) {
    long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline long div_ceil(long a, long b) { return -div_floor(-a, b); }

// Laurent series ring A((t)) over an arbitrary coefficient ring, with windowed
// precision tracking. Exact inputs give exact outputs for +,-,*; truncation
// only enters through explicit calls or genuinely truncated operands.
template <Ring R>
class LaurentRing {
public:
    using Base = R;
    using Coeff = typename R::Elem;
    using Elem = LaurentWindow<Coeff>;

    LaurentRing(R base, std::string var) : base_(std::move(base)), var_(std::move(var)) {}

    const R& base() const { return base_; }
    const std::string& var() const { return var_; }

    Elem make(long lo, std::vector<Coeff> coeffs, long prec = kInfPrec) const {
        if (prec < kInfPrec && lo + static_cast<long>(coeffs.size()) > prec)
            coeffs.resize(static_cast<std::size_t>(prec - lo < 0 ? 0 : prec - lo));
        std::size_t begin = 0;
        while (begin < coeffs.size() && base_.is_zero(coeffs[begin])) ++begin;
        std::size_t end = coeffs.size();
        while (end > begin && base_.is_zero(coeffs[end - 1])) --end;
        Elem w;
        w.prec = prec;
        if (begin == end) {
            w.lo = 0;
            return w;
        }
        w.lo = lo + static_cast<long>(begin);
        w.coeffs.assign(coeffs.begin() + static_cast<long>(begin),
                        coeffs.begin() + static_cast<long>(end));
        return w;
    }

    Elem zero() const { return {}; }
    Elem one() const { return monomial(base_.one(), 0); }

    Elem monomial(const Coeff& c, long k) const {
        Elem w;
        if (base_.is_zero(c)) return w;
        w.lo = k;
        w.coeffs = {c};
        return w;
    }

    Elem constant(const Coeff& c) const { return monomial(c, 0); }
    Elem gen() const { return monomial(base_.one(), 1); }

    // True exact zero; windows that are merely zero to finite precision are
    // not reported as zero, so skipping "zero" terms never loses precision.
    bool is_zero(const Elem& a) const { return a.coeffs.empty() && a.prec >= kInfPrec; }

    bool is_exact(const Elem& a) const { return a.prec >= kInfPrec; }

    // Smallest exponent that can carry a nonzero coefficient.
    long ord_lower_bound(const Elem& a) const {
        if (!a.coeffs.empty()) return a.lo;
        return a.prec; // kInfPrec for the exact zero
    }

    Elem add(const Elem& a, const Elem& b) const {
        const long prec = std::min(a.prec, b.prec);
        if (a.coeffs.empty() && b.coeffs.empty()) return make(0, {}, prec);
        long lo = std::min(a.coeffs.empty() ? b.lo : a.lo, b.coeffs.empty() ? a.lo : b.lo);
        long hi = lo;
        if (!a.coeffs.empty()) hi = std::max(hi, a.lo + static_cast<long>(a.coeffs.size()));
        if (!b.coeffs.empty()) hi = std::max(hi, b.lo + static_cast<long>(b.coeffs.size()));
        std::vector<Coeff> out(static_cast<std::size_t>(hi - lo), base_.zero());
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            out[static_cast<std::size_t>(a.lo - lo) + i] = a.coeffs[i];
        for (std::size_t i = 0; i < b.coeffs.size(); ++i) {
            auto& slot = out[static_cast<std::size_t>(b.lo - lo) + i];
            slot = base_.add(slot, b.coeffs[i]);
        }
        return make(lo, std::move(out), prec);
    }

    Elem neg(const Elem& a) const {
        Elem out = a;
        for (auto& c : out.coeffs) c = base_.neg(c);
        return out;
    }

    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

    Elem mul(const Elem& a, const Elem& b) const {
        if (is_zero(a) || is_zero(b)) return zero();
        const long prec =
            std::min(prec_add(a.prec, ord_lower_bound(b)), prec_add(b.prec, ord_lower_bound(a)));
        if (a.coeffs.empty() || b.coeffs.empty()) return make(0, {}, prec);
        std::vector<Coeff> out(a.coeffs.size() + b.coeffs.size() - 1, base_.zero());
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
            if (base_.is_zero(a.coeffs[i])) continue;
            for (std::size_t j = 0; j < b.coeffs.size(); ++j)
                out[i + j] = base_.add(out[i + j], base_.mul(a.coeffs[i], b.coeffs[j]));
        }
        return make(a.lo + b.lo, std::move(out), prec);
    }

    bool eq(const Elem& a, const Elem& b) const {
        if (a.prec != b.prec || a.lo != b.lo || a.coeffs.size() != b.coeffs.size()) return false;
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            if (!base_.eq(a.coeffs[i], b.coeffs[i])) return false;
        return true;
    }

    Elem from_integer(const BigInt& n) const { return constant(base_.from_integer(n)); }
    Elem from_rational(const BigRat& q) const { return constant(base_.from_rational(q)); }

    Elem divide_exact_int(const Elem& a, const BigInt& n) const {
        Elem out = a;
        for (auto& c : out.coeffs) c = base_.divide_exact_int(c, n);
        return out;
    }

    // Ring-level inverses cover exactly the exact monomials c*t^k with c a
    // unit; general series inversion must state a precision (invert_window).
    Elem inv(const Elem& a) const
        requires RingWithInv<R>
    {
        if (a.prec < kInfPrec || a.coeffs.size() != 1)
            throw not_invertible("only exact monomials are invertible without a stated precision");
        return monomial(base_.inv(a.coeffs[0]), -a.lo);
    }

    BigInt characteristic() const { return base_.characteristic(); }
    bool torsion_free() const { return base_.torsion_free(); }
    bool is_field() const { return false; }
    std::string name() const { return "Laurent(" + base_.name() + "," + var_ + ")"; }

    std::string to_string(const Elem& a) const {
        std::string out;
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
            if (base_.is_zero(a.coeffs[i])) continue;
            const long e = a.lo + static_cast<long>(i);
            std::string c = base_.to_string(a.coeffs[i]);
            bool negative = !c.empty() && c[0] == '-';
            std::string mag = negative ? c.substr(1) : c;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            if (e == 0) {
                out += parenthesize(mag);
            } else {
                std::string tp = e == 1 ? var_ : var_ + "^" + std::to_string(e);
                out += (mag == "1") ? tp : parenthesize(mag) + "*" + tp;
            }
        }
        if (a.prec < kInfPrec) {
            if (!out.empty()) out += " + ";
            out += "O(" + var_ + "^" + std::to_string(a.prec) + ")";
        }
        if (out.empty()) out = "0";
        return out;
    }

    // --- window utilities ---------------------------------------------------

    Coeff coeff_at(const Elem& a, long n) const {
        if (n >= a.prec)
            throw insufficient_precision("coefficient of " + var_ + "^" + std::to_string(n) +
                                         " is beyond the known precision O(" + var_ + "^" +
                                         std::to_string(a.prec) + ")");
        if (a.coeffs.empty() || n < a.lo || n >= a.lo + static_cast<long>(a.coeffs.size()))
            return base_.zero();
        return a.coeffs[static_cast<std::size_t>(n - a.lo)];
    }

    Elem truncate(const Elem& a, long n) const {
        std::vector<Coeff> c = a.coeffs;
        return make(a.lo, std::move(c), std::min(a.prec, n));
    }

    Elem shift(const Elem& a, long k) const {
        Elem out = a;
        if (!out.coeffs.empty()) out.lo += k;
        out.prec = prec_add(out.prec, k);
        return out;
    }

    // d/dt, termwise; one order of precision is lost.
    Elem derivative(const Elem& a) const {
        std::vector<Coeff> out(a.coeffs.size(), base_.zero());
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
            const long e = a.lo + static_cast<long>(i);
            out[i] = base_.mul(base_.from_integer(BigInt(e)), a.coeffs[i]);
        }
        return make(a.lo - 1, std::move(out), a.prec >= kInfPrec ? kInfPrec : a.prec - 1);
    }

    // Multiplicative inverse computed to absolute precision out_prec (or the
    // information-theoretic cap, whichever is lower). The lowest coefficient
    // must be invertible in the base ring.
    Elem invert(const Elem& a, long out_prec) const
        requires RingWithInv<R>
    {
        if (a.coeffs.empty()) {
            if (a.prec >= kInfPrec) throw not_invertible("division by zero Laurent series");
            throw insufficient_precision("cannot invert a series that is zero to its known precision");
        }
        if (a.prec >= kInfPrec && a.coeffs.size() == 1) return inv(a);
        const long cap = a.prec >= kInfPrec ? kInfPrec : a.prec - 2 * a.lo;
        const long target = std::min(out_prec, cap);
        if (target >= kInfPrec)
            throw domain_error("series inverse needs a finite target precision");
        const Coeff c0 = base_.inv(a.coeffs[0]);
        // Result exponents run from -lo; the j-th relative coefficient sits at
        // absolute exponent j - lo, so exponents below `target` need j < target + lo.
        const long n = target + a.lo;
        if (n <= 0) return make(0, {}, target);
        std::vector<Coeff> x(static_cast<std::size_t>(n), base_.zero());
        x[0] = c0;
        for (long e = 1; e < n; ++e) {
            Coeff acc = base_.zero();
            for (long i = 1; i <= e && i < static_cast<long>(a.coeffs.size()); ++i)
                acc = base_.add(acc, base_.mul(a.coeffs[static_cast<std::size_t>(i)],
                                               x[static_cast<std::size_t>(e - i)]));
            x[static_cast<std::size_t>(e)] = base_.neg(base_.mul(c0, acc));
        }
        return make(-a.lo, std::move(x), target);
    }

    // Substitute t -> t^e (e >= 1).
    Elem inflate(const Elem& a, long e) const {
        if (e < 1) throw domain_error("inflate needs a positive exponent");
        std::vector<Coeff> out;
        if (!a.coeffs.empty()) {
            out.assign((a.coeffs.size() - 1) * static_cast<std::size_t>(e) + 1, base_.zero());
            for (std::size_t i = 0; i < a.coeffs.size(); ++i)
                out[i * static_cast<std::size_t>(e)] = a.coeffs[i];
        }
        const long prec = a.prec >= kInfPrec / e ? kInfPrec : a.prec * e;
        return make(a.lo * e, std::move(out), prec);
    }

    // Extract the residue class b (mod e): the series g with
    // a = sum_b t^b g_b(t^e). Component windows live in the same variable.
    Elem class_part(const Elem& a, long e, long b) const {
        if (e < 1 || b < 0 || b >= e) throw domain_error("bad residue class");
        std::vector<Coeff> out;
        long zlo = 0;
        if (!a.coeffs.empty()) {
            const long first = a.lo + ((b - a.lo) % e + e) % e; // smallest exponent == b mod e, >= lo
            zlo = div_floor(first - b, e);
            const long hi = a.lo + static_cast<long>(a.coeffs.size());
            for (long n = first; n < hi; n += e)
                out.push_back(a.coeffs[static_cast<std::size_t>(n - a.lo)]);
        }
        const long zprec = a.prec >= kInfPrec ? kInfPrec : div_ceil(a.prec - b, e);
        return make(zlo, std::move(out), zprec);
    }

private:
    R base_;
    std::string var_;
};

} // namespace witt

#endif
