#ifndef WITT_TEST_UTIL_HPP
#define WITT_TEST_UTIL_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

#include <witt/rings.hpp>
#include <witt/truncation.hpp>
#include <witt/witt.hpp>

namespace wtest {

// Witt vector from integer literals, converted through the ring.
template <witt::Ring R>
witt::WittVector<R> wv(const R& r, const witt::TruncationSet& S,
                       std::initializer_list<long long> comps) {
    std::vector<typename R::Elem> c;
    for (long long v : comps) c.push_back(r.from_integer(witt::BigInt(v)));
    return witt::make_witt(r, S, std::move(c));
}

} // namespace wtest

#endif
