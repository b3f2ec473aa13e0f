#ifndef WITT_TRACE_HPP
#define WITT_TRACE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "witt/error.hpp"
#include "witt/free_algebra.hpp"
#include "witt/laurent.hpp"
#include "witt/matrix.hpp"
#include "witt/one_unit.hpp"
#include "witt/poly.hpp"
#include "witt/rings.hpp"
#include "witt/truncation.hpp"
#include "witt/witt.hpp"

namespace witt {

// Norm of a one-unit along a free algebra B/A: the determinant of the
// multiplication-by-f matrix on B[T]/(T^(cap+1)), viewed as a free module
// over A[T]/(T^(cap+1)) with the algebra basis. One-units map to one-units,
// which drives the Witt-vector trace below.
template <Ring R>
OneUnit<R> norm_one_unit(const FreeAlgebraRing<R>& B, const OneUnit<FreeAlgebraRing<R>>& f) {
    using FA = FreeAlgebraRing<R>;
    const R& A = B.base();
    const std::size_t d = B.rank();
    const std::size_t cap = static_cast<std::size_t>(f.S.max());

    const Poly<FA> series = expand_one_unit(B, f, cap);
    TruncPolyRing<R> tp(A, cap);
    Matrix<typename TruncPolyRing<R>::Elem> m(d, d, tp.zero());
    for (std::size_t j = 0; j < d; ++j) {
        const typename FA::Elem ej = B.basis_elem(j);
        for (std::size_t k = 0; k < series.size(); ++k) {
            const typename FA::Elem col = B.mul(series[k], ej);
            for (std::size_t i = 0; i < d; ++i) {
                if (A.is_zero(col[i])) continue;
                m.at(i, j) = tp.add(m.at(i, j), tp.make(poly_monomial(A, col[i], k)));
            }
        }
    }
    return one_unit_from_series(A, f.S, det(tp, m));
}

// Tr: W_S(B) -> W_S(A) through the series model: convert to a one-unit, take
// the norm, convert back. Additive, W_S(A)-linear, and intertwines the ghost
// map with the classical matrix trace per slot.
template <Ring R>
WittVector<R> trace_witt(const FreeAlgebraRing<R>& B, const WittVector<FreeAlgebraRing<R>>& w) {
    return from_one_unit(B.base(), norm_one_unit(B, to_one_unit(B, w)));
}

// Trace for the Laurent-base extension B((t)) over A((z)) with z = t^e:
// B((t)) is free over A((z)) with basis { e_i * t^b : i < rank(B), b < e }.
// Input windows are in t over B; output windows are in the new variable z
// over A. Window precision propagates; too-short inputs surface as
// insufficient_precision from the series peel or a downstream coefficient
// read.
template <Ring R>
WittVector<LaurentRing<R>> trace_witt_laurent(const FreeAlgebraRing<R>& B, std::uint64_t e,
                                              const WittVector<LaurentRing<FreeAlgebraRing<R>>>& w,
                                              const std::string& out_var = "z") {
    using FA = FreeAlgebraRing<R>;
    if (e == 0) throw domain_error("ramification index must be positive");
    const R& A = B.base();
    const LaurentRing<FA> LB(B, "t");
    const LaurentRing<R> LA(A, out_var);
    const LaurentRing<R> LT(A, "t"); // coordinate windows before regrouping in z
    const std::size_t d = B.rank();
    const std::size_t rk = d * static_cast<std::size_t>(e);
    const std::size_t cap = static_cast<std::size_t>(w.S.max());

    const OneUnit<LaurentRing<FA>> u = to_one_unit(LB, w);
    const Poly<LaurentRing<FA>> series = expand_one_unit(LB, u, cap);

    // Coordinates of a B-window: one A-window per algebra basis index.
    auto coords = [&](const typename LaurentRing<FA>::Elem& h) {
        std::vector<typename LaurentRing<R>::Elem> out(d);
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<typename R::Elem> ci(h.coeffs.size(), A.zero());
            for (std::size_t k = 0; k < h.coeffs.size(); ++k) ci[k] = h.coeffs[k][i];
            out[i] = LT.make(h.lo, std::move(ci), h.prec);
        }
        return out;
    };

    TruncPolyRing<LaurentRing<R>> tp(LA, cap);
    Matrix<typename TruncPolyRing<LaurentRing<R>>::Elem> m(rk, rk, tp.zero());
    for (std::size_t j = 0; j < d; ++j) {
        const typename FA::Elem ej = B.basis_elem(j);
        for (std::uint64_t bj = 0; bj < e; ++bj) {
            const std::size_t col = j * static_cast<std::size_t>(e) + static_cast<std::size_t>(bj);
            for (std::size_t k = 0; k < series.size(); ++k) {
                // T^k coefficient of series * (e_j t^bj), then its (i, bi) parts.
                typename LaurentRing<FA>::Elem h = series[k];
                for (auto& c : h.coeffs) c = B.mul(c, ej);
                h = LB.shift(LB.make(h.lo, std::move(h.coeffs), h.prec), static_cast<long>(bj));
                const auto cs = coords(h);
                for (std::size_t i = 0; i < d; ++i) {
                    for (std::uint64_t bi = 0; bi < e; ++bi) {
                        typename LaurentRing<R>::Elem win =
                            LT.class_part(cs[i], static_cast<long>(e), static_cast<long>(bi));
                        if (win.coeffs.empty() && win.prec >= kInfPrec) continue;
                        const std::size_t row =
                            i * static_cast<std::size_t>(e) + static_cast<std::size_t>(bi);
                        Poly<LaurentRing<R>> entry(k + 1, LA.zero());
                        entry[k] = win;
                        m.at(row, col) = tp.add(m.at(row, col), tp.make(std::move(entry)));
                    }
                }
            }
        }
    }
    const Poly<LaurentRing<R>> nm = det(tp, m);
    return from_one_unit(LA, one_unit_from_series(LA, w.S, nm));
}

} // namespace witt

#endif
