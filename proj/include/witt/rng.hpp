#ifndef WITT_RNG_HPP
#define WITT_RNG_HPP

#include <cstdint>
#include <string>

namespace witt {

// splitmix64: tiny, well-mixed, and identical on every platform. The CLI's
// byte-identical-output guarantee rules out std:: distributions, whose
// sequences are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n = 0 yields 0.
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    // Uniform in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return next() & 1; }

    // Derive an independent stream for a named subtask; keeps suite seeds
    // stable when suites are added or reordered.
    Rng fork(const std::string& label) const {
        std::uint64_t h = 1469598103934665603ull ^ state_;
        for (unsigned char c : label) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return Rng(h);
    }

private:
    std::uint64_t state_;
};

} // namespace witt

#endif
