#ifndef WITT_ERROR_HPP
#define WITT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace witt {

// Base class for every error this library raises on bad input or an
// unsatisfiable request. Internal logic bugs use assert(), not exceptions.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input outside an operation's documented domain (wrong ring kind, size cap,
// mismatched truncation sets, characteristic-2 rejection, ...).
struct domain_error : error {
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// Ghost vector with no Witt preimage: one of the integrality congruences
// fails, observed as a non-exact division in the unghost recursion.
struct not_in_ghost_image : error {
    explicit not_in_ghost_image(const std::string& msg) : error(msg) {}
};

// Operation needs a ring property the given ring lacks (e.g. unghost over a
// torsion ring).
struct unsupported_ring : error {
    explicit unsupported_ring(const std::string& msg) : error(msg) {}
};

// Division that had to be exact was not.
struct exact_division_error : error {
    explicit exact_division_error(const std::string& msg) : error(msg) {}
};

// Multiplicative inverse requested for a non-unit.
struct not_invertible : error {
    explicit not_invertible(const std::string& msg) : error(msg) {}
};

// A Laurent-series computation needs coefficients beyond the provable
// precision of its inputs. Drivers catch this and retry with wider windows.
struct insufficient_precision : error {
    explicit insufficient_precision(const std::string& msg) : error(msg) {}
};

// Malformed textual input (scalar literals, ring tags, CLI expressions).
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

} // namespace witt

#endif
