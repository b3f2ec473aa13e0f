// wittctl: exact calculator for big Witt vectors over finite truncation sets,
// plus the seeded verification suites. Exit codes: 0 success / verified,
// 1 verification failure (a JSON counterexample goes to stdout), 2 bad input.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "witt/io.hpp"
#include "witt/selftest.hpp"

namespace {

using nlohmann::json;
using namespace witt;

struct Options {
    std::string ring = "Z";
    std::string field = "Q";
    std::string S;
    std::string w, v;
    std::string f;
    std::string g = "1";
    std::string form_path;
    std::string ext;
    std::string base = "Q";
    std::string suite;
    std::uint64_t m = 0;
    std::uint64_t p = 0;
    std::uint64_t trials = 10;
    std::uint64_t seed = 42;
    bool as_json = false;
};

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

BigInt parse_integer_literal(const std::string& raw, const std::string& what) {
    const std::string s = trim(raw);
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw parse_error(what + ": bad integer '" + raw + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') throw parse_error(what + ": bad integer '" + raw + "'");
    return BigInt(s);
}

template <class F>
int with_ring(const std::string& tag, F&& fn) {
    if (tag == "Z") return fn(IntegerRing{});
    if (tag == "Q") return fn(RationalRing{});
    if (tag.rfind("Zmod:", 0) == 0)
        return fn(ModRing(parse_integer_literal(tag.substr(5), "--ring Zmod modulus")));
    if (tag.rfind("Fp:", 0) == 0)
        return fn(PrimeFieldRing(parse_integer_literal(tag.substr(3), "--ring Fp characteristic")));
    throw parse_error("unknown ring tag '" + tag + "' (use Z, Q, Zmod:n, or Fp:p)");
}

template <class F>
int with_field(const std::string& tag, F&& fn) {
    if (tag == "Q") return fn(RationalRing{});
    if (tag.rfind("Fp:", 0) == 0)
        return fn(PrimeFieldRing(parse_integer_literal(tag.substr(3), "--field Fp characteristic")));
    throw parse_error("unknown field tag '" + tag + "' (use Q or Fp:p)");
}

// Scalar literals: everything the expression grammar accepts, plus the
// explicit residue form "k mod n" for the modular rings.
template <Ring R>
typename R::Elem parse_cli_scalar(const R& r, const std::string& src) {
    if constexpr (std::is_same_v<R, ModRing> || std::is_same_v<R, PrimeFieldRing>) {
        const auto pos = src.find(" mod ");
        if (pos != std::string::npos) {
            const BigInt k = parse_integer_literal(src.substr(0, pos), "mod literal");
            const BigInt n = parse_integer_literal(src.substr(pos + 5), "mod literal");
            if (n != r.characteristic())
                throw parse_error("mod literal '" + src + "' does not match ring " + r.name());
            return r.from_integer(k);
        }
    }
    return parse_scalar(r, src);
}

std::vector<std::string> split_top_level(const std::string& src) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= src.size(); ++i) {
        if (i == src.size() || (src[i] == ',' && depth == 0)) {
            out.push_back(trim(src.substr(start, i - start)));
            start = i + 1;
        } else if (src[i] == '(' || src[i] == '[' || src[i] == '{') {
            ++depth;
        } else if (src[i] == ')' || src[i] == ']' || src[i] == '}') {
            --depth;
        }
    }
    return out;
}

template <Ring R, class ParseComp>
WittVector<R> witt_from_json_value(const R& r, const TruncationSet& S, const json& j,
                                   const std::string& flag, ParseComp&& pc) {
    if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
        throw parse_error(flag + ": vector JSON needs a \"components\" array");
    if (j.contains("ring") && (!j["ring"].is_string() || j["ring"].get<std::string>() != r.name()))
        throw parse_error(flag + ": JSON ring tag does not match " + r.name());
    if (j.contains("S")) {
        std::vector<std::uint64_t> el;
        try {
            el = j["S"].get<std::vector<std::uint64_t>>();
        } catch (const json::exception&) {
            throw parse_error(flag + ": JSON S must be an array of positive integers");
        }
        if (!(make_truncation(el) == S))
            throw parse_error(flag + ": JSON S does not match --S " + S.to_string());
    }
    const auto& arr = j["components"];
    if (arr.size() != S.size())
        throw parse_error(flag + ": expected " + std::to_string(S.size()) +
                          " components for S=" + S.to_string());
    WittVector<R> w = witt_zero(r, S);
    for (std::size_t i = 0; i < w.comp.size(); ++i) {
        if (!arr[i].is_string()) throw parse_error(flag + ": components must be strings");
        w.comp[i] = pc(arr[i].get<std::string>());
    }
    return w;
}

// A vector argument is a JSON object, a bracketed scalar "[a]" meaning the
// multiplicative lift of a, or a comma list of components in S order.
template <Ring R, class ParseComp>
WittVector<R> parse_witt_with(const R& r, const TruncationSet& S, const std::string& src,
                              const std::string& flag, ParseComp&& pc) {
    const std::string t = trim(src);
    if (t.empty()) throw parse_error(flag + ": empty vector literal");
    if (t.front() == '{') {
        json j;
        try {
            j = json::parse(t);
        } catch (const json::exception& e) {
            throw parse_error(flag + ": bad JSON: " + std::string(e.what()));
        }
        return witt_from_json_value(r, S, j, flag, pc);
    }
    if (t.front() == '[') {
        if (t.back() != ']') throw parse_error(flag + ": unbalanced brackets in '" + src + "'");
        return teichmuller(r, S, pc(t.substr(1, t.size() - 2)));
    }
    const auto parts = split_top_level(t);
    if (parts.size() != S.size())
        throw parse_error(flag + ": expected " + std::to_string(S.size()) +
                          " components for S=" + S.to_string() + ", got " +
                          std::to_string(parts.size()));
    WittVector<R> w = witt_zero(r, S);
    for (std::size_t i = 0; i < parts.size(); ++i) w.comp[i] = pc(parts[i]);
    return w;
}

template <Ring R>
WittVector<R> parse_witt_arg(const R& r, const TruncationSet& S, const std::string& src,
                             const std::string& flag) {
    return parse_witt_with(r, S, src, flag,
                           [&](const std::string& c) { return parse_cli_scalar(r, c); });
}

template <Ring R>
json components_json(const R& r, const std::vector<typename R::Elem>& comps) {
    json arr = json::array();
    for (const auto& c : comps) arr.push_back(r.to_string(c));
    return arr;
}

template <Ring R>
json witt_json(const R& r, const TruncationSet& S, const std::vector<typename R::Elem>& comps) {
    json j;
    j["S"] = S.elements();
    j["ring"] = r.name();
    j["components"] = components_json(r, comps);
    return j;
}

template <Ring R>
int emit_vector(const R& r, const TruncationSet& S, const std::vector<typename R::Elem>& comps,
                bool as_json) {
    if (as_json)
        std::cout << witt_json(r, S, comps).dump() << "\n";
    else
        std::cout << join_components(r, comps) << "\n";
    return 0;
}

// ------------------------------------------------------------------ verbs ---

int run_ghost(const Options& o) {
    return with_ring(o.ring, [&](const auto& r) {
        const TruncationSet S = parse_truncation(o.S);
        const auto w = parse_witt_arg(r, S, o.w, "--w");
        return emit_vector(r, S, ghost(r, w), o.as_json);
    });
}

int run_unghost(const Options& o) {
    return with_ring(o.ring, [&](const auto& r) {
        const TruncationSet S = parse_truncation(o.S);
        const auto gw = parse_witt_arg(r, S, o.w, "--w");
        const auto w = unghost(r, S, gw.comp);
        return emit_vector(r, S, w.comp, o.as_json);
    });
}

int run_add(const Options& o) {
    return with_ring(o.ring, [&](const auto& r) {
        const TruncationSet S = parse_truncation(o.S);
        const auto w = parse_witt_arg(r, S, o.w, "--w");
        const auto v = parse_witt_arg(r, S, o.v, "--v");
        return emit_vector(r, S, witt_add(r, w, v).comp, o.as_json);
    });
}

int run_mul(const Options& o) {
    return with_ring(o.ring, [&](const auto& r) {
        const TruncationSet S = parse_truncation(o.S);
        const auto w = parse_witt_arg(r, S, o.w, "--w");
        const auto v = parse_witt_arg(r, S, o.v, "--v");
        return emit_vector(r, S, witt_mul(r, w, v).comp, o.as_json);
    });
}

int run_frob(const Options& o) {
    if (o.m == 0) throw parse_error("frob needs --m <positive index>");
    return with_ring(o.ring, [&](const auto& r) {
        const TruncationSet S = parse_truncation(o.S);
        const auto w = parse_witt_arg(r, S, o.w, "--w");
        const auto out = frobenius(r, o.m, w);
        return emit_vector(r, out.S, out.comp, o.as_json);
    });
}

int run_versch(const Options& o) {
    if (o.m == 0) throw parse_error("versch needs --m <positive index>");
    return with_ring(o.ring, [&](const auto& r) {
        const TruncationSet S = parse_truncation(o.S);
        const auto w = parse_witt_arg(r, quotient(S, o.m), o.w, "--w");
        return emit_vector(r, S, verschiebung(r, o.m, w, S).comp, o.as_json);
    });
}

int run_teich(const Options& o) {
    return with_ring(o.ring, [&](const auto& r) {
        const TruncationSet S = parse_truncation(o.S);
        std::string t = trim(o.w);
        if (t.size() >= 2 && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
        const auto a = parse_cli_scalar(r, t);
        return emit_vector(r, S, teichmuller(r, S, a).comp, o.as_json);
    });
}

int run_series(const Options& o) {
    return with_ring(o.ring, [&](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        const TruncationSet S = parse_truncation(o.S);
        if (!o.w.empty() && !o.f.empty())
            throw parse_error("series takes --w (expand) or --f (solve back), not both");
        if (!o.w.empty()) {
            const auto w = parse_witt_arg(r, S, o.w, "--w");
            const Poly<R> ser = expand_one_unit(r, to_one_unit(r, w));
            const std::string text = poly_to_string(r, ser, "T");
            if (o.as_json) {
                json j;
                j["S"] = S.elements();
                j["ring"] = r.name();
                j["series"] = text;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << text << "\n";
            }
            return 0;
        }
        if (o.f.empty())
            throw parse_error("series needs --w (vector to expand) or --f (series in T)");
        const Poly<R> ser = parse_poly(r, o.f, "T");
        return emit_vector(r, S, witt_from_series(r, S, ser).comp, o.as_json);
    });
}

int run_trace(const Options& o) {
    if (o.ext.empty()) throw parse_error("trace needs --ext <monic polynomial in y>");
    return with_ring(o.base, [&](const auto& base) {
        using B = std::decay_t<decltype(base)>;
        const TruncationSet S = parse_truncation(o.S);
        const Poly<B> pi = parse_poly(base, o.ext, "y");
        const FreeAlgebraRing<B> E(base, pi, "y");
        const auto w = parse_witt_with(E, S, o.w, "--w", [&](const std::string& c) {
            return E.from_poly(parse_poly(base, c, "y"));
        });
        return emit_vector(base, S, trace_witt(E, w).comp, o.as_json);
    });
}

int run_split(const Options& o) {
    if (o.p == 0) throw parse_error("split needs --p <odd prime>");
    return with_ring(o.ring, [&](const auto& r) {
        const TruncationSet S = parse_truncation(o.S);
        const auto w = parse_witt_arg(r, S, o.w, "--w");
        const auto sp = ptypical_split(r, w, o.p);
        if (o.as_json) {
            json parts = json::array();
            for (const auto& [n, part] : sp.parts) {
                json pj = witt_json(r, part.S, part.comp);
                pj["n"] = n;
                parts.push_back(std::move(pj));
            }
            json j;
            j["p"] = o.p;
            j["ring"] = r.name();
            j["S"] = S.elements();
            j["parts"] = std::move(parts);
            std::cout << j.dump() << "\n";
        } else {
            for (const auto& [n, part] : sp.parts)
                std::cout << "n=" << n << ": " << join_components(r, part.comp) << "\n";
        }
        return 0;
    });
}

template <RingWithInv K>
typename LaurentRing<K>::Elem parse_laurent_literal(const LaurentRing<K>& lr, const K& k,
                                                    const std::string& src) {
    const RatFuncRing<K> rf(k, "t");
    const RatFunc<K> f = parse_ratfunc(rf, src, "t");
    if (f.num.empty()) return lr.zero();
    for (std::size_t i = 0; i + 1 < f.den.size(); ++i)
        if (!k.is_zero(f.den[i]))
            throw parse_error("Laurent literal needs a monomial denominator: '" + src + "'");
    const long d = static_cast<long>(f.den.size()) - 1;
    auto out = lr.zero();
    for (std::size_t i = 0; i < f.num.size(); ++i)
        if (!k.is_zero(f.num[i]))
            out = lr.add(out, lr.monomial(f.num[i], static_cast<long>(i) - d));
    return out;
}

int run_res(const Options& o) {
    if (o.form_path.empty()) throw parse_error("res needs --form <file.json>");
    return with_field(o.field, [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        const TruncationSet S = parse_truncation(o.S);
        const LaurentRing<K> lr(k, "t");
        std::ifstream in(o.form_path);
        if (!in) throw parse_error("cannot open '" + o.form_path + "'");
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception& e) {
            throw parse_error("--form: bad JSON: " + std::string(e.what()));
        }
        if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
            throw parse_error("--form: expected {\"terms\":[{\"alpha\":...,\"beta\":...}]}");
        const auto pc = [&](const std::string& c) { return parse_laurent_literal(lr, k, c); };
        WittOneForm<K> form = make_form<K>(S);
        for (const auto& term : j["terms"]) {
            if (!term.is_object() || !term.contains("alpha") || !term.contains("beta"))
                throw parse_error("--form: every term needs \"alpha\" and \"beta\"");
            auto a = witt_from_json_value(lr, S, term["alpha"], "--form alpha", pc);
            auto b = witt_from_json_value(lr, S, term["beta"], "--form beta", pc);
            form_add_term(form, std::move(a), std::move(b));
        }
        return emit_vector(k, S, residue_form(lr, form).comp, o.as_json);
    });
}

template <RingWithInv K>
std::string point_str(const K& k, const ClosedPoint<K>& P) {
    return P.at_infinity ? std::string("inf") : poly_to_string(k, P.pi, "x");
}

int run_residue_theorem(const Options& o) {
    return with_field(o.field, [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        const TruncationSet S = parse_truncation(o.S);
        const RatFuncRing<K> rf(k, "x");
        std::vector<Poly<K>> pool;
        pool.push_back(poly_monomial(k, k.one(), 1));
        pool.push_back(Poly<K>{k.one(), k.one()});
        pool.push_back(Poly<K>{k.from_integer(BigInt(-2)), k.one()});
        for (long c = 1;; ++c) {
            Poly<K> quad = {k.from_integer(BigInt(c)), k.zero(), k.one()};
            if (poly_is_irreducible(k, quad)) {
                pool.push_back(quad);
                break;
            }
        }
        const Rng root(o.seed);
        Rng g = root.fork("residue-theorem");
        auto rand_scalar = [&](Rng& gg) {
            return k.from_integer(BigInt(gg.range(-9, 9)));
        };
        auto rand_rf = [&](Rng& gg) {
            Poly<K> num(1 + gg.below(3), k.zero());
            for (auto& c : num) c = rand_scalar(gg);
            poly_trim(k, num);
            if (poly_is_zero(num)) num = {k.one()};
            Poly<K> den = {k.one()};
            const std::size_t nden = gg.below(3);
            for (std::size_t d = 0; d < nden; ++d) den = poly_mul(k, den, pool[gg.below(pool.size())]);
            return rf.make(num, den);
        };
        for (std::uint64_t t = 0; t < o.trials; ++t) {
            RatOneForm<K> w = make_rat_form<K>(S);
            const std::size_t nterms = 1 + g.below(2);
            for (std::size_t term = 0; term < nterms; ++term) {
                WittVector<RatFuncRing<K>> a = witt_zero(rf, S);
                WittVector<RatFuncRing<K>> b = witt_zero(rf, S);
                for (std::size_t idx = 0; idx < S.size(); ++idx) {
                    if (g.coin()) a.comp[idx] = rand_rf(g);
                    if (g.coin()) b.comp[idx] = rand_rf(g);
                }
                if (t % 3 == 0 && term == 0)
                    a.comp[0] = rf.make(Poly<K>{k.one()}, pool.back());
                rat_form_add_term(w, std::move(a), std::move(b));
            }
            auto sum = witt_zero(k, S);
            json residues = json::array();
            for (const auto& P : support_points(k, w)) {
                const auto rP = local_residue(k, w, P);
                sum = witt_add(k, sum, rP);
                json pj;
                pj["point"] = point_str(k, P);
                pj["residue"] = components_json(k, rP.comp);
                residues.push_back(std::move(pj));
            }
            if (!witt_eq(k, sum, witt_zero(k, S))) {
                json terms = json::array();
                for (const auto& term : w.terms) {
                    json tj;
                    tj["alpha"] = witt_json(rf, S, term.a.comp);
                    tj["beta"] = witt_json(rf, S, term.b.comp);
                    terms.push_back(std::move(tj));
                }
                json ce;
                ce["trial"] = t;
                ce["form"] = json{{"terms", std::move(terms)}};
                ce["residues"] = std::move(residues);
                ce["sum"] = components_json(k, sum.comp);
                std::cout << ce.dump() << "\n";
                return 1;
            }
        }
        if (o.as_json) {
            json j;
            j["suite"] = "residue-theorem";
            j["trials"] = o.trials;
            j["failures"] = json::array();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "pass (" << o.trials << " trials)\n";
        }
        return 0;
    });
}

int run_theta(const Options& o) {
    if (o.m == 0) throw parse_error("theta needs --m <positive level>");
    if (o.f.empty()) throw parse_error("theta needs --f <polynomial in x>");
    return with_field(o.field, [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        const Poly<K> f = parse_poly(k, o.f, "x");
        const Poly<K> g = parse_poly(k, o.g, "x");
        ZeroCycle<K> z = divisor_on_gm(k, f);
        for (const auto& pt : divisor_on_gm(k, g).points) cycle_add_point(k, z, pt.pi, -pt.mult);
        const TruncationSet S = truncation_upto(o.m);
        const auto left = theta1(k, z, o.m);
        const auto right =
            witt_sub(k, one_unit_of_poly(k, f, o.m), one_unit_of_poly(k, g, o.m));
        const bool ok = witt_eq(k, left, right);
        if (o.as_json) {
            json j;
            j["S"] = S.elements();
            j["field"] = k.name();
            j["theta"] = components_json(k, left.comp);
            j["series"] = components_json(k, right.comp);
            j["pass"] = ok;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "theta:  " << join_components(k, left.comp) << "\n";
            std::cout << "series: " << join_components(k, right.comp) << "\n";
            std::cout << "verdict: " << (ok ? "pass" : "FAIL") << "\n";
        }
        return ok ? 0 : 1;
    });
}

json report_json(const SuiteReport& rep, bool with_elapsed) {
    json fj = json::array();
    for (const auto& f : rep.failures)
        fj.push_back(json{{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
    json j;
    j["suite"] = rep.suite;
    j["trials"] = rep.trials;
    j["failures"] = std::move(fj);
    if (with_elapsed) j["elapsed_ms"] = rep.elapsed_ms;
    return j;
}

int run_selftest(const Options& o) {
    if (!o.suite.empty()) {
        bool known = false;
        for (const auto& [name, fn] : selftest_suites()) {
            (void)fn;
            if (name == o.suite) known = true;
        }
        if (!known) throw parse_error("unknown suite '" + o.suite + "'");
    }
    const auto reports = run_selftests(o.seed, o.trials, o.suite);
    bool all_ok = true;
    if (o.as_json) {
        json arr = json::array();
        for (const auto& rep : reports) {
            arr.push_back(report_json(rep, true));
            all_ok = all_ok && rep.passed();
        }
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& rep : reports) {
            if (rep.passed())
                std::cout << rep.suite << ": pass (" << rep.trials << " trials)\n";
            else
                std::cout << rep.suite << ": FAIL (" << rep.trials << " trials, "
                          << rep.failures.size() << " failures)\n";
            std::cerr << rep.suite << ": " << std::fixed << std::setprecision(1)
                      << rep.elapsed_ms << " ms\n";
            all_ok = all_ok && rep.passed();
        }
        if (!all_ok) {
            for (const auto& rep : reports)
                if (!rep.passed()) {
                    std::cout << report_json(rep, false).dump() << "\n";
                    break;
                }
        }
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"exact big-Witt-vector calculator and verifier"};
    app.require_subcommand(1);

    std::vector<std::pair<CLI::App*, int (*)(const Options&)>> table;

    auto add_ring = [&](CLI::App* c) {
        c->add_option("--ring", o.ring, "coefficient ring: Z, Q, Zmod:n, Fp:p (default Z)");
    };
    auto add_field = [&](CLI::App* c) {
        c->add_option("--field", o.field, "coefficient field: Q or Fp:p (default Q)");
    };
    auto add_S = [&](CLI::App* c) {
        c->add_option("--S", o.S, "truncation set, e.g. 1,2,3,6 or 1..6")->required();
    };
    auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.as_json, "machine-readable output"); };
    auto add_w = [&](CLI::App* c, const char* help) {
        c->add_option("--w", o.w, help)->required();
    };

    auto* c_ghost = app.add_subcommand("ghost", "ghost coordinates of a vector");
    add_ring(c_ghost);
    add_S(c_ghost);
    add_w(c_ghost, "vector: comma list, [a] for the multiplicative lift, or JSON");
    add_json(c_ghost);
    table.emplace_back(c_ghost, &run_ghost);

    auto* c_unghost = app.add_subcommand("unghost", "solve ghost coordinates back to a vector");
    add_ring(c_unghost);
    add_S(c_unghost);
    add_w(c_unghost, "ghost coordinates: comma list or JSON");
    add_json(c_unghost);
    table.emplace_back(c_unghost, &run_unghost);

    auto* c_add = app.add_subcommand("add", "sum of two vectors");
    auto* c_mul = app.add_subcommand("mul", "product of two vectors");
    const std::pair<CLI::App*, int (*)(const Options&)> binary_verbs[] = {{c_add, &run_add},
                                                                          {c_mul, &run_mul}};
    for (auto [c, fn] : binary_verbs) {
        add_ring(c);
        add_S(c);
        add_w(c, "left operand");
        c->add_option("--v", o.v, "right operand")->required();
        add_json(c);
        table.emplace_back(c, fn);
    }

    auto* c_frob = app.add_subcommand("frob", "Frobenius F_m; result lives on S/m");
    auto* c_versch = app.add_subcommand("versch", "Verschiebung V_m; --w lives on S/m");
    const std::pair<CLI::App*, int (*)(const Options&)> shift_verbs[] = {{c_frob, &run_frob},
                                                                         {c_versch, &run_versch}};
    for (auto [c, fn] : shift_verbs) {
        add_ring(c);
        add_S(c);
        add_w(c, "input vector");
        c->add_option("--m", o.m, "operator index")->required();
        add_json(c);
        table.emplace_back(c, fn);
    }

    auto* c_teich = app.add_subcommand("teich", "multiplicative lift of a scalar");
    add_ring(c_teich);
    add_S(c_teich);
    add_w(c_teich, "scalar expression");
    add_json(c_teich);
    table.emplace_back(c_teich, &run_teich);

    auto* c_series = app.add_subcommand("series",
                                        "one-unit power series of a vector, or solve one back");
    add_ring(c_series);
    add_S(c_series);
    c_series->add_option("--w", o.w, "vector to expand into a series in T");
    c_series->add_option("--f", o.f, "one-unit series in T to solve back into a vector");
    add_json(c_series);
    table.emplace_back(c_series, &run_series);

    auto* c_trace = app.add_subcommand("trace", "trace down a monogenic free extension");
    c_trace->add_option("--base", o.base, "base ring tag (default Q)");
    c_trace->add_option("--ext", o.ext, "monic defining polynomial in y")->required();
    add_S(c_trace);
    add_w(c_trace, "vector over the extension; components are expressions in y");
    add_json(c_trace);
    table.emplace_back(c_trace, &run_trace);

    auto* c_split = app.add_subcommand("split", "p-typical decomposition");
    add_ring(c_split);
    add_S(c_split);
    add_w(c_split, "vector to decompose");
    c_split->add_option("--p", o.p, "odd prime")->required();
    add_json(c_split);
    table.emplace_back(c_split, &run_split);

    auto* c_res = app.add_subcommand("res", "residue of a form over Laurent series");
    add_field(c_res);
    add_S(c_res);
    c_res->add_option("--form", o.form_path, "JSON file {\"terms\":[{\"alpha\":...,\"beta\":...}]}")
        ->required();
    add_json(c_res);
    table.emplace_back(c_res, &run_res);

    const char* rt_help = "check that residues over the projective line sum to zero";
    auto* c_rt = app.add_subcommand("residue-theorem", rt_help);
    auto* c_verify = app.add_subcommand("verify", "verification harnesses");
    c_verify->require_subcommand(1);
    auto* c_vres = c_verify->add_subcommand("residue", rt_help);
    for (auto* c : {c_rt, c_vres}) {
        add_field(c);
        add_S(c);
        c->add_option("--trials", o.trials, "number of random forms (default 10)");
        c->add_option("--seed", o.seed, "generator seed (default 42)");
        add_json(c);
        table.emplace_back(c, &run_residue_theorem);
    }

    auto* c_theta = app.add_subcommand("theta", "divisor map against the one-unit series");
    add_field(c_theta);
    c_theta->add_option("--m", o.m, "truncation level, S = {1..m}")->required();
    c_theta->add_option("--f", o.f, "polynomial in x with f(0) != 0")->required();
    c_theta->add_option("--g", o.g, "polynomial in x with g(0) != 0 (default 1)");
    add_json(c_theta);
    table.emplace_back(c_theta, &run_theta);

    auto* c_self = app.add_subcommand("selftest", "run the seeded verification suites");
    c_self->add_option("--seed", o.seed, "suite seed (default 42)");
    c_self->add_option("--trials", o.trials, "trials per suite (default 10)");
    c_self->add_option("--suite", o.suite, "run only the named suite");
    add_json(c_self);
    table.emplace_back(c_self, &run_selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        for (const auto& [cmd, fn] : table)
            if (cmd->parsed()) return fn(o);
        std::cerr << "wittctl: no verb\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "wittctl: " << e.what() << "\n";
        return 2;
    } catch (const witt::error& e) {
        std::cerr << "wittctl: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "wittctl: " << e.what() << "\n";
        return 2;
    }
}
