#include <catch2/catch_amalgamated.hpp>

#include <witt/factor.hpp>
#include <witt/matrix.hpp>
#include <witt/one_unit.hpp>
#include <witt/poly.hpp>
#include <witt/rings.hpp>

using namespace witt;

TEST_CASE("determinant on pinned integer matrices") {
    IntegerRing z;
    Matrix<BigInt> a(2, 2, BigInt(0));
    a.at(0, 0) = 1; a.at(0, 1) = 2; a.at(1, 0) = 3; a.at(1, 1) = 4;
    REQUIRE(det(z, a) == BigInt(-2));

    // Rank 3 exercises the expansion sign on odd rows.
    Matrix<BigInt> b(3, 3, BigInt(0));
    b.at(0, 0) = 2; b.at(0, 2) = 1;
    b.at(1, 0) = 1; b.at(1, 1) = 3; b.at(1, 2) = 2;
    b.at(2, 0) = 1; b.at(2, 1) = 1; b.at(2, 2) = 1;
    REQUIRE(det(z, b) == BigInt(0));

    Matrix<BigInt> c(4, 4, BigInt(0)); // permutation of two swaps: determinant +1
    c.at(0, 1) = 1; c.at(1, 0) = 1; c.at(2, 3) = 1; c.at(3, 2) = 1;
    REQUIRE(det(z, c) == BigInt(1));

    Matrix<BigInt> d(5, 5, BigInt(0)); // diag(1..5) with rows 0,1 swapped
    d.at(0, 1) = 2; d.at(1, 0) = 1; d.at(2, 2) = 3; d.at(3, 3) = 4; d.at(4, 4) = 5;
    REQUIRE(det(z, d) == BigInt(-120));
}

TEST_CASE("determinant is multiplicative") {
    IntegerRing z;
    Matrix<BigInt> a(3, 3, BigInt(0)), b(3, 3, BigInt(0));
    const long long av[9] = {2, 1, 0, -1, 3, 2, 4, 0, 1};
    const long long bv[9] = {1, 0, 2, 3, -2, 1, 0, 1, 1};
    for (int i = 0; i < 9; ++i) {
        a.a[static_cast<std::size_t>(i)] = BigInt(av[i]);
        b.a[static_cast<std::size_t>(i)] = BigInt(bv[i]);
    }
    REQUIRE(det(z, mat_mul(z, a, b)) == det(z, a) * det(z, b));
}

TEST_CASE("determinant over a truncated series ring with nilpotent entries") {
    // (1 - dT)(1) - (-T)(-dT) with cap 2: the entries are zero divisors, so
    // this goes through the division-free path.
    RationalRing q;
    TruncPolyRing<RationalRing> tp(q, 2);
    const BigRat d0(5);
    Matrix<typename TruncPolyRing<RationalRing>::Elem> m(2, 2, tp.zero());
    m.at(0, 0) = tp.make({q.one()});
    m.at(0, 1) = tp.make(poly_monomial(q, q.neg(d0), 1));
    m.at(1, 0) = tp.make(poly_monomial(q, BigRat(-1), 1));
    m.at(1, 1) = tp.make({q.one()});
    const auto dd = det(tp, m);
    const Poly<RationalRing> want{q.one(), q.zero(), q.neg(d0)}; // 1 - d0 T^2
    REQUIRE(poly_eq(q, dd, want));
}

TEST_CASE("linear solve over a field, and singularity") {
    RationalRing q;
    Matrix<BigRat> a(2, 2, BigRat(0));
    a.at(0, 0) = 2; a.at(0, 1) = 1; a.at(1, 0) = 1; a.at(1, 1) = 3;
    const auto x = solve_linear(q, a, {BigRat(5), BigRat(10)});
    REQUIRE(x[0] == BigRat(1));
    REQUIRE(x[1] == BigRat(3));

    Matrix<BigRat> s(2, 2, BigRat(0));
    s.at(0, 0) = 1; s.at(0, 1) = 2; s.at(1, 0) = 2; s.at(1, 1) = 4;
    REQUIRE_THROWS_AS(solve_linear(q, s, {BigRat(1), BigRat(1)}), not_invertible);
}

TEST_CASE("quadratic with no roots splits or stays prime by field") {
    PrimeFieldRing f5(BigInt(5)), f7(BigInt(7));
    const Poly<PrimeFieldRing> x2p1{f5.one(), f5.zero(), f5.one()}; // x^2 + 1

    SECTION("over F5 it splits into the two square roots of -1") {
        const auto fac = factor_poly(f5, x2p1);
        REQUIRE(fac.factors.size() == 2);
        std::vector<BigInt> roots;
        for (const auto& f : fac.factors) {
            REQUIRE(poly_deg(f.poly) == 1);
            REQUIRE(f.multiplicity == 1);
            roots.push_back(f5.neg(f.poly[0]));
        }
        std::sort(roots.begin(), roots.end());
        REQUIRE(roots == std::vector<BigInt>{BigInt(2), BigInt(3)});
    }
    SECTION("over F7 it is irreducible") {
        const Poly<PrimeFieldRing> g{f7.one(), f7.zero(), f7.one()};
        REQUIRE(poly_is_irreducible(f7, g));
        const auto fac = factor_poly(f7, g);
        REQUIRE(fac.factors.size() == 1);
        REQUIRE(poly_deg(fac.factors[0].poly) == 2);
    }
}

TEST_CASE("rational factorization finds roots and repeated factors") {
    RationalRing q;
    // (x - 1)^2 (x + 2), expanded: x^3 - 3x + 2
    const Poly<RationalRing> f{BigRat(2), BigRat(-3), BigRat(0), BigRat(1)};
    const auto fac = factor_poly(q, f);
    bool saw_double_root_one = false, saw_root_minus_two = false;
    for (const auto& g : fac.factors) {
        if (poly_deg(g.poly) == 1 && g.poly[0] == BigRat(-1) && g.multiplicity == 2)
            saw_double_root_one = true;
        if (poly_deg(g.poly) == 1 && g.poly[0] == BigRat(2) && g.multiplicity == 1)
            saw_root_minus_two = true;
    }
    REQUIRE(saw_double_root_one);
    REQUIRE(saw_root_minus_two);
}

TEST_CASE("irreducibility over the rationals") {
    RationalRing q;
    REQUIRE(poly_is_irreducible(q, Poly<RationalRing>{BigRat(-2), BigRat(0), BigRat(1)}));
    REQUIRE_FALSE(poly_is_irreducible(q, Poly<RationalRing>{BigRat(-1), BigRat(0), BigRat(1)}));
}

TEST_CASE("polynomial division with remainder") {
    RationalRing q;
    const Poly<RationalRing> f{BigRat(1), BigRat(0), BigRat(0), BigRat(1)}; // x^3 + 1
    const Poly<RationalRing> g{BigRat(1), BigRat(1)};                       // x + 1
    const auto [quo, rem] = poly_divmod(q, f, g);
    REQUIRE(poly_eq(q, rem, Poly<RationalRing>{}));
    REQUIRE(poly_eq(q, quo, Poly<RationalRing>{BigRat(1), BigRat(-1), BigRat(1)}));
}
