#ifndef WITT_WITT_LAURENT_HPP
#define WITT_WITT_LAURENT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "witt/error.hpp"
#include "witt/laurent.hpp"
#include "witt/rings.hpp"
#include "witt/truncation.hpp"
#include "witt/witt.hpp"

namespace witt {

// One canonical summand V_n([a] [t]^j): the exponent and the coefficient.
template <Ring R>
struct LaurentTermT {
    long j;
    typename R::Elem a;
};

// w = sum_{n in S} V_n( sum_j [a_{nj}] [t]^j ), truncated at a caller-chosen
// exponent bound. Entries appear in ascending n, each with ascending j.
template <Ring R>
struct WittLaurentDecomposition {
    std::vector<std::pair<std::uint64_t, std::vector<LaurentTermT<R>>>> rows;
};

// Canonical decomposition by repeated stripping: take the least index s0
// carrying a coefficient visible at an exponent <= max_degree, read that
// visible part off as Teichmueller data, subtract V_s0 of the sum, repeat.
// The working vector is never truncated, so exact inputs stay exact through
// every round; the degree cut applies only to what is read. Subtracting
// V_s0(u) clears exactly the visible part of slot s0 (every correction
// monomial of the subtraction law carries a factor from a slot of V_s0(u)
// below s0, which is zero), so each round settles one slot for good and at
// most |S| rounds happen. Reading a window demands precision past max_degree;
// anything less would make the cut silent guesswork.
template <Ring R>
WittLaurentDecomposition<R> decompose_laurent(const LaurentRing<R>& lr,
                                              const WittVector<LaurentRing<R>>& w,
                                              long max_degree) {
    const R& base = lr.base();
    WittLaurentDecomposition<R> out;
    WittVector<LaurentRing<R>> work = w;
    auto visible = [&](const typename LaurentRing<R>::Elem& c, std::uint64_t slot) {
        if (c.prec <= max_degree)
            throw insufficient_precision(
                "decomposition up to degree " + std::to_string(max_degree) +
                " needs window precision past that degree, have O(t^" + std::to_string(c.prec) +
                ") in slot " + std::to_string(slot));
        return lr.truncate(c, max_degree + 1);
    };
    for (std::size_t round = 0; round <= work.S.size(); ++round) {
        std::size_t idx = work.comp.size();
        typename LaurentRing<R>::Elem vis;
        for (std::size_t i = 0; i < work.comp.size(); ++i) {
            vis = visible(work.comp[i], work.S.elements()[i]);
            if (!vis.coeffs.empty()) {
                idx = i;
                break;
            }
        }
        if (idx == work.comp.size()) break;
        const std::uint64_t s0 = work.S.elements()[idx];
        std::vector<LaurentTermT<R>> terms;
        const TruncationSet Sq = quotient(work.S, s0);
        WittVector<LaurentRing<R>> u = witt_zero(lr, Sq);
        for (std::size_t k = 0; k < vis.coeffs.size(); ++k) {
            if (base.is_zero(vis.coeffs[k])) continue;
            const long j = vis.lo + static_cast<long>(k);
            terms.push_back({j, vis.coeffs[k]});
            u = witt_add(lr, u, teichmuller(lr, Sq, lr.monomial(vis.coeffs[k], j)));
        }
        out.rows.emplace_back(s0, std::move(terms));
        work = witt_sub(lr, work, verschiebung(lr, s0, u, work.S));
    }
    return out;
}

// Largest pole order among the component windows (0 for everything regular).
template <Ring R>
long max_pole_order(const LaurentRing<R>&, const WittVector<LaurentRing<R>>& w) {
    long d = 0;
    for (const auto& c : w.comp)
        if (!c.coeffs.empty() && c.lo < -d) d = -c.lo;
    return d;
}

} // namespace witt

#endif
