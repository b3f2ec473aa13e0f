// Acceptance harness: runs the library's exact-verification battery and
// prints one pass/fail line per criterion. The wittctl binary path is
// expected as argv[1] (used by the CLI determinism criterion). Exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <utility>
#include <vector>

#include "witt/selftest.hpp"

namespace {

using namespace witt;

constexpr std::uint64_t kSeed = 42;

struct Outcome {
    bool ok = false;
    std::string detail;
};

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(1) << s << "s";
    return o.str();
}

std::string first_failure(const SuiteReport& rep) {
    const auto& f = rep.failures.front();
    return "[" + f.input + "] expected " + f.expected + ", got " + f.got;
}

// Runs one named property suite at the requested trial count; a positive
// budget enforces a wall-clock limit on top of correctness.
Outcome run_suite(const std::string& name, std::uint64_t trials, double budget_s = 0.0) {
    for (const auto& [n, fn] : selftest_suites()) {
        if (n != name) continue;
        SuiteReport rep;
        rep.suite = n;
        const auto t0 = std::chrono::steady_clock::now();
        fn(Rng(kSeed).fork(n), trials, rep);
        const double el = seconds_since(t0);
        std::ostringstream d;
        d << rep.trials << " checks in " << fmt_seconds(el);
        if (!rep.passed()) return {false, d.str() + "; " + first_failure(rep)};
        if (budget_s > 0.0 && el > budget_s)
            return {false, d.str() + "; exceeded the " + fmt_seconds(budget_s) + " budget"};
        return {true, d.str()};
    }
    return {false, "no property suite named " + name};
}

// The coordinate family of [1+x] - [1]: recover each f_n by peeling the
// difference with Verschiebung shifts, pin the first three members, replay
// the identity exactly in W_S(Z[x]), and confirm the per-slot ghost
// recursion (1+x)^s = 1 + sum over n | s of n * (x f_n)^(s/n).
Outcome check_coordinate_family() {
    IntegerRing z;
    const PolyRing<IntegerRing> zx(z, "x");
    const TruncationSet S = truncation_upto(6);
    const Poly<IntegerRing> one_poly{BigInt(1)};
    const Poly<IntegerRing> one_plus_x{BigInt(1), BigInt(1)};
    const Poly<IntegerRing> x_poly{BigInt(0), BigInt(1)};

    auto diff = witt_sub(zx, teichmuller(zx, S, one_plus_x), witt_one(zx, S));
    std::vector<Poly<IntegerRing>> fs;
    for (auto n : S.elements()) {
        const Poly<IntegerRing> c = witt_component(diff, n);
        if (!(c.empty() || z.is_zero(c[0])))
            return {false, "component at slot " + std::to_string(n) + " is not divisible by x"};
        Poly<IntegerRing> fn;
        if (!c.empty()) fn.assign(c.begin() + 1, c.end());
        fs.push_back(std::move(fn));
        diff = witt_sub(zx, diff, verschiebung(zx, n, teichmuller(zx, quotient(S, n), c), S));
    }
    if (!witt_eq(zx, diff, witt_zero(zx, S)))
        return {false, "peeling left a nonzero remainder"};
    if (!poly_eq(z, fs[0], one_poly)) return {false, "f_1 != 1"};
    if (!poly_eq(z, fs[1], one_poly)) return {false, "f_2 != 1"};
    if (!poly_eq(z, fs[2], one_plus_x)) return {false, "f_3 != 1 + x"};

    const auto family = teichmuller_shift_family(S);
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (!poly_eq(z, fs[i], family[i]))
            return {false, "recursion family disagrees with the peeled family at index " +
                               std::to_string(i)};

    auto rebuilt = witt_one(zx, S);
    const auto& slots = S.elements();
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const Poly<IntegerRing> xf = poly_mul(z, x_poly, fs[i]);
        rebuilt = witt_add(zx, rebuilt,
                           verschiebung(zx, slots[i], teichmuller(zx, quotient(S, slots[i]), xf), S));
    }
    if (!witt_eq(zx, rebuilt, teichmuller(zx, S, one_plus_x)))
        return {false, "[1] + sum V_n([x f_n]) != [1+x] in W(Z[x])"};

    for (auto s : slots) {
        const Poly<IntegerRing> want = poly_pow(z, one_plus_x, s);
        Poly<IntegerRing> got = one_poly;
        for (auto n : divisors_of(s)) {
            const Poly<IntegerRing> xf = poly_mul(z, x_poly, fs[S.index_of(n)]);
            got = poly_add(z, got, poly_scale(z, BigInt(n), poly_pow(z, xf, s / n)));
        }
        if (!poly_eq(z, want, got))
            return {false, "ghost recursion fails at slot " + std::to_string(s)};
    }
    return {true, "f_1 = f_2 = 1, f_3 = 1 + x; exact identity and ghost recursion on S = {1..6}"};
}

// Residue theorem on the projective line for one coefficient field: random
// one-forms built from rational functions, every residue sum must vanish,
// and enough of the sampled forms must have a support point whose residue
// field is a proper extension.
template <typename K>
Outcome residue_theorem_field(const K& k, const std::string& kn) {
    const TruncationSet S = truncation_upto(4);
    const RatFuncRing<K> rf(k, "x");
    Rng g = Rng(kSeed).fork("residue-" + kn);

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
    auto rand_rf = [&](Rng& gg) {
        Poly<K> num(1 + gg.below(3), k.zero());
        for (auto& c : num) c = selftest_detail::random_scalar(k, gg);
        poly_trim(k, num);
        if (poly_is_zero(num)) num = {k.one()};
        Poly<K> den = {k.one()};
        const std::size_t nden = gg.below(3);
        for (std::size_t d = 0; d < nden; ++d) den = poly_mul(k, den, pool[gg.below(pool.size())]);
        return rf.make(num, den);
    };

    const std::uint64_t forms = 50;
    std::uint64_t higher_degree = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::uint64_t t = 0; t < forms; ++t) {
        RatOneForm<K> w = make_rat_form<K>(S);
        const std::size_t nterms = 1 + g.below(2);
        for (std::size_t term = 0; term < nterms; ++term) {
            WittVector<RatFuncRing<K>> a = witt_zero(rf, S);
            WittVector<RatFuncRing<K>> b = witt_zero(rf, S);
            for (std::size_t idx = 0; idx < S.size(); ++idx) {
                if (g.coin()) a.comp[idx] = rand_rf(g);
                if (g.coin()) b.comp[idx] = rand_rf(g);
            }
            if (t % 3 == 0 && term == 0) a.comp[0] = rf.make(Poly<K>{k.one()}, pool.back());
            rat_form_add_term(w, std::move(a), std::move(b));
        }
        bool big = false;
        for (const auto& P : support_points(k, w))
            if (P.degree() >= 2) big = true;
        if (big) ++higher_degree;
        if (!verify_residue_theorem(k, w))
            return {false, kn + ": nonzero residue sum on trial " + std::to_string(t) + ", got " +
                               selftest_detail::witt_str(k, residue_sum(k, w))};
    }
    const double el = seconds_since(t0);
    std::ostringstream d;
    d << kn << ": " << forms << " forms, " << higher_degree
      << " with a degree>=2 support point, " << fmt_seconds(el);
    if (higher_degree < 10) return {false, d.str() + "; fewer than 10 higher-degree points"};
    if (el > 300.0) return {false, d.str() + "; exceeded the 300s budget"};
    return {true, d.str()};
}

Outcome check_residue_theorem() {
    const Outcome a = residue_theorem_field(RationalRing{}, "Q");
    if (!a.ok) return a;
    const Outcome b = residue_theorem_field(PrimeFieldRing(BigInt(5)), "F5");
    if (!b.ok) return b;
    const Outcome c = residue_theorem_field(PrimeFieldRing(BigInt(7)), "F7");
    if (!c.ok) return c;
    return {true, a.detail + "; " + b.detail + "; " + c.detail};
}

// Ghost residues of V_n([a/(x-c)^r]) d V_m([b x^i]) over Q, swept over the
// full parameter grid and compared slot by slot against the binomial
// closed form, both at the finite pole x = c and at infinity.
Outcome check_binomial_grid() {
    RationalRing q;
    const RatFuncRing<RationalRing> rf(q, "x");
    const TruncationSet S = truncation_upto(6);
    Rng g = Rng(kSeed).fork("binomial-grid");
    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t cells = 0, equalities = 0;
    for (std::uint64_t n = 1; n <= 3; ++n)
        for (std::uint64_t m = 1; m <= 3; ++m)
            for (std::uint64_t r = 1; r <= 2; ++r)
                for (std::uint64_t i = 1; i <= 4; ++i) {
                    const BigRat a = selftest_detail::random_unit_scalar(q, g);
                    const BigRat b = selftest_detail::random_unit_scalar(q, g);
                    const BigRat c = selftest_detail::random_unit_scalar(q, g);
                    const Poly<RationalRing> xc{q.neg(c), q.one()};
                    auto av = verschiebung(
                        rf, n,
                        teichmuller(rf, quotient(S, n),
                                    rf.make(poly_const(q, a), poly_pow(q, xc, r))),
                        S);
                    auto bv = verschiebung(
                        rf, m,
                        teichmuller(rf, quotient(S, m),
                                    rf.make(poly_monomial(q, b, i), poly_const(q, q.one()))),
                        S);
                    RatOneForm<RationalRing> w = make_rat_form<RationalRing>(S);
                    rat_form_add_term(w, std::move(av), std::move(bv));
                    const auto at_pole = local_residue(q, w, finite_point(q, xc));
                    const auto at_inf = local_residue(q, w, point_at_infinity<RationalRing>());
                    const std::string cell = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                             " r=" + std::to_string(r) + " i=" + std::to_string(i);
                    for (auto s : S.elements()) {
                        BigRat want(0);
                        if (s % n == 0 && s % m == 0 && r * (s / n) <= i * (s / m)) {
                            want = BigRat(BigInt(n * i) * binomial(BigInt(i * (s / m) - 1),
                                                                   BigInt(r * (s / n) - 1)));
                            want = q.mul(want, ring_pow(q, a, s / n));
                            want = q.mul(want, ring_pow(q, b, s / m));
                            want = q.mul(want, ring_pow(q, c, i * (s / m) - r * (s / n)));
                        }
                        if (!q.eq(want, ghost_component(q, at_pole, s)))
                            return {false, "pole mismatch at " + cell + " s=" + std::to_string(s)};
                        if (!q.eq(q.neg(want), ghost_component(q, at_inf, s)))
                            return {false,
                                    "infinity mismatch at " + cell + " s=" + std::to_string(s)};
                        equalities += 2;
                    }
                    ++cells;
                }
    return {true, std::to_string(cells) + " parameter cells, " + std::to_string(equalities) +
                      " ghost equalities in " + fmt_seconds(seconds_since(t0))};
}

// Runs `wittctl selftest --seed 42` twice and demands exit status 0, every
// suite reporting pass, and byte-identical standard output across the runs.
Outcome check_cli_determinism(const std::string& wittctl_path) {
    if (wittctl_path.empty()) return {false, "wittctl path was not supplied as argv[1]"};
    auto run_once = [&](std::string& out) -> int {
        const std::string cmd = "\"" + wittctl_path + "\" selftest --seed 42 2>/dev/null";
        FILE* p = popen(cmd.c_str(), "r");
        if (!p) return -1;
        char buf[4096];
        std::size_t nread = 0;
        while ((nread = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, nread);
        const int st = pclose(p);
        if (st == -1) return -1;
        return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    };
    std::string first, second;
    const int st1 = run_once(first);
    const int st2 = run_once(second);
    if (st1 != 0) return {false, "first run exited with status " + std::to_string(st1)};
    if (st2 != 0) return {false, "second run exited with status " + std::to_string(st2)};
    if (first != second) return {false, "reports differ between the two runs"};
    for (const auto& [name, fn] : selftest_suites()) {
        (void)fn;
        if (first.find(name + ": pass") == std::string::npos)
            return {false, "suite " + name + " did not report pass"};
    }
    return {true, std::to_string(first.size()) + " bytes, byte-identical across two runs, exit 0"};
}

} // namespace

int main(int argc, char** argv) {
    const std::string wittctl_path = argc > 1 ? argv[1] : "";

    struct Criterion {
        std::string label;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"Witt ring laws over Z, Q, F7, Z/6 on three truncation sets, 200 triples each",
         [] { return run_suite("witt-axioms", 200, 60.0); }},
        {"ghost/unghost round trip and ghost ring-homomorphism laws over Z and Q, 500 vectors each",
         [] { return run_suite("ghost", 500); }},
        {"Frobenius/Verschiebung identity families over Z, Q, F7, Z/6, 200 instances per ring",
         [] { return run_suite("frobenius-verschiebung", 200); }},
        {"trace: ghost compatibility, base linearity, quartic tower, inseparable cubic layer",
         [] { return run_suite("trace", 50); }},
        {"p-typical split/unsplit round trips and idempotent decomposition at p = 3",
         [] { return run_suite("ptypical", 100); }},
        {"Verschiebung coordinate family of [1+x] - [1] over Z[x]",
         [] { return check_coordinate_family(); }},
        {"residue-pairing closed form and ghost compatibility of one-forms, 100 instances each",
         [] { return run_suite("forms-residues", 100); }},
        {"residue theorem on the projective line over Q, F5, F7, 50 forms per field",
         [] { return check_residue_theorem(); }},
        {"binomial ghost-residue family at the finite pole and at infinity, full grid",
         [] { return check_binomial_grid(); }},
        {"trace/residue exchange along z = t^2 over a quadratic layer, 25 random inputs",
         [] { return run_suite("trace-residue-exchange", 25); }},
        {"theta map on divisors matches the one-unit series over Q, F5, F7, 100 pairs per field",
         [] { return run_suite("theta", 100); }},
        {"CLI selftest determinism: two runs, byte-identical reports, exit 0",
         [&] { return check_cli_determinism(wittctl_path); }},
    };

    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = {false, std::string("unexpected exception: ") + e.what()};
        }
        all_ok = all_ok && o.ok;
        std::cout << "criterion " << std::setw(2) << (i + 1) << ": " << (o.ok ? "pass" : "FAIL")
                  << "  " << criteria[i].label;
        if (!o.detail.empty()) std::cout << " [" << o.detail << "]";
        std::cout << std::endl;
    }
    std::cout << (all_ok ? "acceptance: all 12 criteria passed" : "acceptance: FAILURES present")
              << std::endl;
    return all_ok ? 0 : 1;
}
