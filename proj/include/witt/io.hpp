#ifndef WITT_IO_HPP
#define WITT_IO_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "witt/error.hpp"
#include "witt/numeric.hpp"
#include "witt/poly.hpp"
#include "witt/ratfunc.hpp"
#include "witt/rings.hpp"
#include "witt/truncation.hpp"

namespace witt {

// Recursive-descent reader for ring literals and polynomials:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := '-' atom | uint ('/' uint)? | var | '(' expr ')'
// A fraction literal is a single token (no general division); `var` is the
// one permitted variable name, or nothing for plain scalars. Values build up
// as polynomials so the same reader serves scalars, moduli, and components.
template <Ring R>
class ExprParser {
public:
    ExprParser(const R& r, std::string src, std::string var)
        : r_(r), src_(std::move(src)), var_(std::move(var)) {}

    Poly<R> parse() {
        Poly<R> out = expr();
        skip_ws();
        if (pos_ != src_.size())
            throw parse_error("unexpected '" + std::string(1, src_[pos_]) + "' at position " +
                              std::to_string(pos_) + " in \"" + src_ + "\"");
        return out;
    }

private:
    const R& r_;
    std::string src_;
    std::string var_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    BigInt read_uint() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_)
            throw parse_error("expected a number at position " + std::to_string(start) + " in \"" +
                              src_ + "\"");
        return BigInt(src_.substr(start, pos_ - start));
    }

    Poly<R> expr() {
        Poly<R> acc = term();
        for (;;) {
            if (eat('+')) acc = poly_add(r_, acc, term());
            else if (eat('-')) acc = poly_sub(r_, acc, term());
            else return acc;
        }
    }

    Poly<R> term() {
        Poly<R> acc = factor();
        while (eat('*')) acc = poly_mul(r_, acc, factor());
        return acc;
    }

    Poly<R> factor() {
        Poly<R> base = atom();
        if (eat('^')) {
            const BigInt e = read_uint();
            if (e > 64) throw parse_error("exponent too large: " + e.str());
            return poly_pow(r_, base, e.convert_to<std::uint64_t>());
        }
        return base;
    }

    Poly<R> atom() {
        skip_ws();
        if (eat('-')) return poly_neg(r_, atom());
        if (eat('(')) {
            Poly<R> inner = expr();
            if (!eat(')'))
                throw parse_error("missing ')' at position " + std::to_string(pos_) + " in \"" +
                                  src_ + "\"");
            return inner;
        }
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const BigInt num = read_uint();
            if (pos_ < src_.size() && src_[pos_] == '/') {
                ++pos_;
                const BigInt den = read_uint();
                if (den == 0) throw parse_error("fraction with zero denominator");
                return poly_const(r_, r_.from_rational(BigRat(num, den)));
            }
            return poly_const(r_, r_.from_integer(num));
        }
        if (!var_.empty() && std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   std::isalnum(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            const std::string name = src_.substr(start, pos_ - start);
            if (name != var_)
                throw parse_error("unknown symbol \"" + name + "\"; the variable here is \"" +
                                  var_ + "\"");
            return poly_monomial(r_, r_.one(), 1);
        }
        throw parse_error("unexpected input at position " + std::to_string(pos_) + " in \"" +
                          src_ + "\"");
    }
};

template <Ring R>
Poly<R> parse_poly(const R& r, const std::string& src, const std::string& var) {
    return ExprParser<R>(r, src, var).parse();
}

template <Ring R>
typename R::Elem parse_scalar(const R& r, const std::string& src) {
    Poly<R> f = ExprParser<R>(r, src, "").parse();
    if (f.empty()) return r.zero();
    return f[0];
}

// "num/den" with the slash at parenthesis depth zero; a bare polynomial means
// denominator 1.
template <RingWithInv K>
RatFunc<K> parse_ratfunc(const RatFuncRing<K>& rf, const std::string& src,
                         const std::string& var) {
    int depth = 0;
    std::size_t slash = std::string::npos;
    for (std::size_t i = 0; i < src.size() && slash == std::string::npos; ++i) {
        if (src[i] == '(') ++depth;
        else if (src[i] == ')') --depth;
        else if (src[i] == '/' && depth == 0) {
            // digit/digit is a fraction literal for the expression reader;
            // anything else splits numerator from denominator
            const bool digit_left = i > 0 && std::isdigit(static_cast<unsigned char>(src[i - 1]));
            const bool digit_right =
                i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1]));
            if (!(digit_left && digit_right)) slash = i;
        }
    }
    const K& k = rf.base();
    if (slash == std::string::npos) return rf.make(parse_poly(k, src, var), {k.one()});
    return rf.make(parse_poly(k, src.substr(0, slash), var),
                   parse_poly(k, src.substr(slash + 1), var));
}

// Comma-separated scalars.
template <Ring R>
std::vector<typename R::Elem> parse_scalar_list(const R& r, const std::string& src) {
    std::vector<typename R::Elem> out;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= src.size(); ++i) {
        if (i < src.size() && (src[i] == '(')) ++depth;
        if (i < src.size() && (src[i] == ')')) --depth;
        if (i == src.size() || (src[i] == ',' && depth == 0)) {
            out.push_back(parse_scalar(r, src.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

// Index-set specs: comma-separated entries, each "n" or "a..b".
inline std::vector<std::uint64_t> parse_index_spec(const std::string& src) {
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    auto flush = [&](const std::string& tok) {
        if (tok.empty()) throw parse_error("empty entry in index set \"" + src + "\"");
        const std::size_t dots = tok.find("..");
        try {
            if (dots == std::string::npos) {
                out.push_back(std::stoull(tok));
            } else {
                const std::uint64_t a = std::stoull(tok.substr(0, dots));
                const std::uint64_t b = std::stoull(tok.substr(dots + 2));
                if (a > b) throw parse_error("empty range \"" + tok + "\"");
                for (std::uint64_t v = a; v <= b; ++v) out.push_back(v);
            }
        } catch (const parse_error&) {
            throw;
        } catch (...) {
            throw parse_error("bad index entry \"" + tok + "\"");
        }
    };
    for (std::size_t i = 0; i <= src.size(); ++i) {
        if (i == src.size() || src[i] == ',') {
            flush(src.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

inline TruncationSet parse_truncation(const std::string& src) {
    return make_truncation(parse_index_spec(src));
}

template <Ring R>
std::string join_components(const R& r, const std::vector<typename R::Elem>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += r.to_string(v[i]);
    }
    return out;
}

} // namespace witt

#endif
