#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyvenn/scd.hpp"

using namespace polyvenn;

namespace {

Chain chain_of(std::initializer_list<std::uint32_t> bits) {
    Chain c;
    for (std::uint32_t b : bits) c.push_back(SubsetMask{b});
    return c;
}

bool less(std::uint32_t x, std::uint32_t y) { return lex_less(SubsetMask{x}, SubsetMask{y}); }

}  // namespace

TEST_CASE("lex_compare") {
    // {A,C} vs {A,B}: m({A,C},{A,B}) = C, m({A,B},{A,C}) = B, so {A,B} first.
    CHECK(lex_compare(SubsetMask{0b101}, SubsetMask{0b011}) == std::strong_ordering::greater);
    // Subset sentinel: {A} precedes {A,B}.
    CHECK(lex_compare(SubsetMask{0b001}, SubsetMask{0b011}) == std::strong_ordering::less);
    CHECK(lex_compare(SubsetMask{0b010}, SubsetMask{0b100}) == std::strong_ordering::less);
    CHECK_THROWS_AS(lex_compare(SubsetMask{0b1}, SubsetMask{0b1}), std::invalid_argument);
}

TEST_CASE("lex_compare is antisymmetric and total on equal-size subsets") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::uint32_t> pick(0, (1u << 10) - 1);
    int triples = 0;
    while (triples < 2000) {
        SubsetMask a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
        if (a == b || b == c || a == c) continue;
        CHECK((lex_compare(a, b) == std::strong_ordering::less) !=
              (lex_compare(b, a) == std::strong_ordering::less));
        if (a.count() == b.count() && b.count() == c.count()) {
            if (lex_less(a, b) && lex_less(b, c)) CHECK(lex_less(a, c));
        }
        ++triples;
    }
}

TEST_CASE("the subset sentinel breaks transitivity across sizes") {
    // {C,D} < {A,C,D} by the sentinel, {A,C,D} < {B,C} and {B,C} < {C,D} by
    // least differing element: the relation cycles, so it is only a total
    // order within a rank. Aigner's algorithm compares within ranks only.
    CHECK(less(0b1100, 0b1101));
    CHECK(less(0b1101, 0b0110));
    CHECK(less(0b0110, 0b1100));
}

TEST_CASE("christmas tree construction, small cases") {
    ChainDecomposition t2 = christmas_tree_scd(2);
    REQUIRE(t2.chains.size() == 2);
    CHECK(t2.chains[0] == chain_of({1}));
    CHECK(t2.chains[1] == chain_of({0, 2, 3}));

    ChainDecomposition t3 = christmas_tree_scd(3);
    REQUIRE(t3.chains.size() == 3);
    CHECK(t3.chains[0] == chain_of({1, 5}));
    CHECK(t3.chains[1] == chain_of({2, 3}));
    CHECK(t3.chains[2] == chain_of({0, 4, 6, 7}));

    ChainDecomposition t4 = christmas_tree_scd(4);
    REQUIRE(t4.chains.size() == 6);
    std::multiset<std::size_t> lengths;
    for (const Chain& c : t4.chains) lengths.insert(c.size());
    CHECK(lengths == std::multiset<std::size_t>{1, 1, 3, 3, 3, 5});
}

TEST_CASE("aigner construction, small cases") {
    ChainDecomposition a2 = aigner_scd(2);
    REQUIRE(a2.chains.size() == 2);
    CHECK(a2.chains[0] == chain_of({0, 1, 3}));
    CHECK(a2.chains[1] == chain_of({2}));

    ChainDecomposition a3 = aigner_scd(3);
    REQUIRE(a3.chains.size() == 3);
    CHECK(a3.chains[0] == chain_of({0, 1, 3, 7}));
    CHECK(a3.chains[1] == chain_of({2, 6}));
    CHECK(a3.chains[2] == chain_of({4, 5}));

    ChainDecomposition a4 = aigner_scd(4);
    REQUIRE(a4.chains.size() == 6);
    CHECK(a4.chains[0] == chain_of({0, 1, 3, 7, 15}));
    CHECK(a4.chains[1] == chain_of({2, 6, 14}));
    CHECK(a4.chains[2] == chain_of({4, 5, 13}));
    CHECK(a4.chains[3] == chain_of({8, 9, 11}));
    // The rank-2 remainder chains are {B,D} and {C,D}.
    CHECK(a4.chains[4] == chain_of({10}));
    CHECK(a4.chains[5] == chain_of({12}));
    std::multiset<std::size_t> lengths;
    for (const Chain& c : a4.chains) lengths.insert(c.size());
    CHECK(lengths == std::multiset<std::size_t>{1, 1, 3, 3, 3, 5});
}

TEST_CASE("validate_scd") {
    ChainDecomposition good = aigner_scd(6);
    ScdValidation v = validate_scd(good);
    CHECK(v.ok());
    CHECK(good.chains.size() == 20);

    ChainDecomposition missing = good;
    missing.chains[0].pop_back();
    v = validate_scd(missing);
    CHECK_FALSE(v.partition_ok);

    ChainDecomposition stub{3, {chain_of({0, 1})}};
    v = validate_scd(stub);
    CHECK(v.eq1_ok);
    CHECK_FALSE(v.eq2_ok);  // |x_1| = 0 but n - |x_t| = 2

    ChainDecomposition bad_eq1{2, {chain_of({1, 2}), chain_of({0, 3})}};
    v = validate_scd(bad_eq1);
    CHECK_FALSE(v.eq1_ok);

    ChainDecomposition wrong_count{2, {chain_of({0, 1, 3}), chain_of({2}), Chain{}}};
    v = validate_scd(wrong_count);
    CHECK_FALSE(v.count_ok);
}

TEST_CASE("both generators produce valid decompositions up to n = 12") {
    for (int n = 1; n <= 12; ++n) {
        for (ChainDecomposition dec : {aigner_scd(n), christmas_tree_scd(n)}) {
            ScdValidation v = validate_scd(dec);
            CHECK(v.partition_ok);
            CHECK(v.count_ok);
            CHECK(v.eq1_ok);
            CHECK(v.eq2_ok);
            CHECK(dec.chains.size() == binomial(n, n / 2));
            for (const Chain& chain : dec.chains)
                for (std::size_t i = 0; i + 1 < chain.size(); ++i)
                    CHECK(chain[i + 1].count() == chain[i].count() + 1);
        }
    }
}

TEST_CASE("generators are deterministic") {
    for (int n : {3, 7, 10}) {
        CHECK(aigner_scd(n).chains == aigner_scd(n).chains);
        CHECK(christmas_tree_scd(n).chains == christmas_tree_scd(n).chains);
    }
    CHECK_THROWS_AS(aigner_scd(0), std::invalid_argument);
    CHECK_THROWS_AS(christmas_tree_scd(0), std::invalid_argument);
}

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(20, 10) == 184756);
    CHECK(binomial(60, 30) == 118264581564861424ull);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
}
