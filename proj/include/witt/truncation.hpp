#ifndef WITT_TRUNCATION_HPP
#define WITT_TRUNCATION_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "witt/error.hpp"
#include "witt/numeric.hpp"

namespace witt {

// A finite divisor-closed set of positive integers. Indexes every Witt
// construction in the library. The empty set is legal (W_empty is the zero
// ring); any nonempty set contains 1.
class TruncationSet {
public:
    TruncationSet() = default;

    static constexpr std::uint64_t kMaxElement = 64;
    static constexpr std::size_t kMaxSize = 64;

    // Ref-qualified: rvalue receivers hand out a value copy so that
    // `for (auto s : quotient(S, n).elements())` iterates storage whose
    // lifetime the range-for extends, instead of a reference into a dead
    // temporary.
    const std::vector<std::uint64_t>& elements() const& { return elems_; }
    std::vector<std::uint64_t> elements() && { return elems_; }
    bool empty() const { return elems_.empty(); }
    std::size_t size() const { return elems_.size(); }
    std::uint64_t max() const { return elems_.empty() ? 0 : elems_.back(); }

    bool contains(std::uint64_t n) const {
        return std::binary_search(elems_.begin(), elems_.end(), n);
    }

    // Position of n in the sorted element list; n must be present.
    std::size_t index_of(std::uint64_t n) const {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), n);
        if (it == elems_.end() || *it != n)
            throw domain_error("truncation set has no element " + std::to_string(n));
        return static_cast<std::size_t>(it - elems_.begin());
    }

    bool subset_of(const TruncationSet& other) const {
        for (auto s : elems_)
            if (!other.contains(s)) return false;
        return true;
    }

    bool operator==(const TruncationSet& o) const { return elems_ == o.elems_; }
    bool operator!=(const TruncationSet& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string out = "{";
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(elems_[i]);
        }
        return out + "}";
    }

    friend TruncationSet make_truncation(const std::vector<std::uint64_t>& raw);

private:
    std::vector<std::uint64_t> elems_;
};

// Divisor closure of raw, sorted and deduplicated.
inline TruncationSet make_truncation(const std::vector<std::uint64_t>& raw) {
    std::set<std::uint64_t> closed;
    for (auto n : raw) {
        if (n == 0) throw domain_error("truncation sets contain positive integers only");
        if (n > TruncationSet::kMaxElement)
            throw domain_error("truncation element " + std::to_string(n) + " exceeds the cap " +
                               std::to_string(TruncationSet::kMaxElement));
        for (auto d : divisors_of(n)) closed.insert(d);
    }
    if (closed.size() > TruncationSet::kMaxSize)
        throw domain_error("truncation set larger than the size cap");
    TruncationSet s;
    s.elems_.assign(closed.begin(), closed.end());
    return s;
}

inline TruncationSet make_truncation(std::initializer_list<std::uint64_t> raw) {
    return make_truncation(std::vector<std::uint64_t>(raw));
}

// {1,...,m}.
inline TruncationSet truncation_upto(std::uint64_t m) {
    std::vector<std::uint64_t> raw;
    for (std::uint64_t i = 1; i <= m; ++i) raw.push_back(i);
    return make_truncation(raw);
}

// S/n = {d | nd in S}. Empty iff n is not in S.
inline TruncationSet quotient(const TruncationSet& S, std::uint64_t n) {
    if (n == 0) throw domain_error("quotient by zero");
    std::vector<std::uint64_t> raw;
    for (auto s : S.elements())
        if (s % n == 0) raw.push_back(s / n);
    return make_truncation(raw);
}

// Divisor closure of S together with all p-fold multiples of its elements.
inline TruncationSet adjoin_multiples(const TruncationSet& S, std::uint64_t p) {
    if (!is_prime_u64(p)) throw domain_error("adjoin_multiples expects a prime");
    std::vector<std::uint64_t> raw(S.elements());
    for (auto s : S.elements()) raw.push_back(s * p);
    return make_truncation(raw);
}

// Elements of S that are powers of p (including 1): the p-typical part index
// set, written P ∩ S.
inline TruncationSet p_part(const TruncationSet& S, std::uint64_t p) {
    std::vector<std::uint64_t> raw;
    for (auto s : S.elements()) {
        std::uint64_t m = s;
        while (m % p == 0) m /= p;
        if (m == 1) raw.push_back(s);
    }
    return make_truncation(raw);
}

// Elements of S coprime to p: I_p ∩ S.
inline std::vector<std::uint64_t> coprime_part(const TruncationSet& S, std::uint64_t p) {
    std::vector<std::uint64_t> out;
    for (auto s : S.elements())
        if (s % p != 0) out.push_back(s);
    return out;
}

} // namespace witt

#endif
