#include <catch2/catch_amalgamated.hpp>

#include <witt/truncation.hpp>

using namespace witt;

TEST_CASE("construction closes under divisors, sorts, and deduplicates") {
    const TruncationSet S = make_truncation({12, 12, 10});
    REQUIRE(S.elements() == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 10, 12});
    REQUIRE(S.size() == 8);
    REQUIRE(S.max() == 12);
    REQUIRE(S.contains(6));
    REQUIRE_FALSE(S.contains(7));
}

TEST_CASE("upto builds a full initial segment") {
    REQUIRE(truncation_upto(5).elements() == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
    REQUIRE(truncation_upto(0).empty());
}

TEST_CASE("zero and oversized elements are rejected") {
    REQUIRE_THROWS_AS(make_truncation({0}), domain_error);
    REQUIRE_THROWS_AS(make_truncation({65}), domain_error);
    REQUIRE_NOTHROW(make_truncation({64}));
}

TEST_CASE("quotient keeps exactly the cofactors") {
    const TruncationSet S = truncation_upto(8);
    REQUIRE(quotient(S, 2).elements() == std::vector<std::uint64_t>{1, 2, 3, 4});
    REQUIRE(quotient(S, 3).elements() == std::vector<std::uint64_t>{1, 2});
    REQUIRE(quotient(S, 8).elements() == std::vector<std::uint64_t>{1});
    REQUIRE(quotient(S, 9).empty());
    REQUIRE_THROWS_AS(quotient(S, 0), domain_error);
}

TEST_CASE("iterating the elements of a temporary quotient set is safe") {
    // The rvalue overload of elements() must hand out storage that the
    // range-for extends; a reference into the dead temporary produced garbage
    // indices here once.
    const TruncationSet S = truncation_upto(8);
    std::vector<std::uint64_t> seen;
    for (auto s : quotient(S, 2).elements()) seen.push_back(s);
    REQUIRE(seen == std::vector<std::uint64_t>{1, 2, 3, 4});
    for (auto s : truncation_upto(3).elements()) REQUIRE(s <= 3);
}

TEST_CASE("index_of positions and failure") {
    const TruncationSet S = make_truncation({6});
    REQUIRE(S.index_of(1) == 0);
    REQUIRE(S.index_of(6) == 3);
    REQUIRE_THROWS_AS(S.index_of(4), domain_error);
}

TEST_CASE("subset relation") {
    REQUIRE(truncation_upto(3).subset_of(truncation_upto(6)));
    REQUIRE_FALSE(truncation_upto(6).subset_of(truncation_upto(3)));
}

TEST_CASE("prime-multiple adjunction stays divisor-closed") {
    const TruncationSet S = make_truncation({1, 3});
    const TruncationSet T = adjoin_multiples(S, 2);
    REQUIRE(T.elements() == std::vector<std::uint64_t>{1, 2, 3, 6});
    REQUIRE_THROWS_AS(adjoin_multiples(S, 4), domain_error);
}

TEST_CASE("prime-power part and coprime part") {
    const TruncationSet S = truncation_upto(12);
    REQUIRE(p_part(S, 2).elements() == std::vector<std::uint64_t>{1, 2, 4, 8});
    REQUIRE(p_part(S, 3).elements() == std::vector<std::uint64_t>{1, 3, 9});
    REQUIRE(coprime_part(S, 2) == std::vector<std::uint64_t>{1, 3, 5, 7, 9, 11});
    REQUIRE(coprime_part(S, 3) == std::vector<std::uint64_t>{1, 2, 4, 5, 7, 8, 10, 11});
}

TEST_CASE("string form") {
    REQUIRE(truncation_upto(3).to_string() == "{1,2,3}");
    REQUIRE(TruncationSet{}.to_string() == "{}");
}
