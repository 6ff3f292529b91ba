#include <doctest.h>

#include <array>

#include <random>
#include <stdexcept>

#include "ramsey/binomial.hpp"
#include "ramsey/cost.hpp"
#include "support/naive_cost.hpp"

using namespace ramsey;
using ramsey::testing::naive_clique_count;
using ramsey::testing::naive_cost;
using ramsey::testing::naive_independent_count;

namespace {

HypergraphBits all_ones(const EdgeIndexMap& map) {
    HypergraphBits hb(map);
    for (std::uint64_t k = 1; k <= map.length(); ++k) hb.set_edge(k);
    return hb;
}

HypergraphBits pentagon(unsigned n = 5) {
    EdgeIndexMap map(n, 2);
    return encode(map, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
}

}  // namespace

TEST_CASE("mask shapes") {
    CostParams params(5, 3, 4, 2);
    CHECK(params.clique_masks().size() == binomial(5, 3));
    CHECK(params.independent_masks().size() == binomial(5, 4));
    for (const Bits& m : params.clique_masks()) CHECK(m.count() == binomial(3, 2));
    for (const Bits& m : params.independent_masks()) CHECK(m.count() == binomial(4, 2));
}

TEST_CASE("clique counts") {
    CostParams params(4, 3, 3, 2);
    CHECK(count_cliques(params, all_ones(params.map())) == 4);
    CHECK(count_cliques(params, HypergraphBits(params.map())) == 0);

    CostParams p5(5, 3, 3, 2);
    CHECK(naive_clique_count(pentagon(), 3) == 0);  // oracle agrees with frozen value
    CHECK(count_cliques(p5, pentagon()) == 0);
}

TEST_CASE("independent-set counts") {
    CostParams p5(5, 3, 3, 2);
    CHECK(count_independent_sets(p5, HypergraphBits(p5.map())) == 10);
    CHECK(naive_independent_count(pentagon(), 3) == 0);
    CHECK(count_independent_sets(p5, pentagon()) == 0);

    CostParams p4(4, 3, 3, 2);
    CHECK(count_independent_sets(p4, all_ones(p4.map())) == 0);
}

TEST_CASE("cost totals") {
    CostParams p5(5, 3, 3, 2);
    CHECK(cost(p5, pentagon()) == 0);

    CostParams p4(4, 3, 3, 2);
    CHECK(cost(p4, all_ones(p4.map())) == 4);

    CostParams one_triple(3, 3, 3, 3);
    CHECK(cost(one_triple, all_ones(one_triple.map())) == 1);
}

TEST_CASE("mask evaluation equals the literal subset products") {
    for (auto [m, n, r] : {std::array<unsigned, 3>{3, 3, 2}, std::array<unsigned, 3>{4, 4, 3}}) {
        CostParams params(5, m, n, r);
        REQUIRE(params.map().length() == 10);
        for (std::uint64_t x = 0; x < 1024; ++x) {
            HypergraphBits hb = from_basis_index(params.map(), x);
            CHECK(count_cliques(params, hb) == naive_clique_count(hb, m));
            CHECK(count_independent_sets(params, hb) == naive_independent_count(hb, n));
        }
    }
}

TEST_CASE("swapping roles of the two colors complements the string") {
    CostParams forward(5, 3, 4, 2);
    CostParams swapped(5, 4, 3, 2);
    for (std::uint64_t x = 0; x < 1024; ++x) {
        HypergraphBits hb = from_basis_index(forward.map(), x);
        HypergraphBits flipped(forward.map(), hb.bits().complemented());
        CHECK(cost(forward, hb) == cost(swapped, flipped));
    }
}

TEST_CASE("counts stay within the subset totals") {
    std::mt19937_64 rng(11);
    CostParams params(6, 3, 4, 2);
    for (int trial = 0; trial < 200; ++trial) {
        HypergraphBits hb = from_basis_index(params.map(), rng() & 0x7fff);
        CHECK(count_cliques(params, hb) <= binomial(6, 3));
        CHECK(count_independent_sets(params, hb) <= binomial(6, 4));
    }
}

TEST_CASE("adding an edge never removes a clique or adds an independent set") {
    std::mt19937_64 rng(13);
    CostParams params(6, 3, 3, 2);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t x = rng() & 0x7fff;
        std::uint64_t missing = ~x & 0x7fff;
        if (missing == 0) continue;
        for (std::uint64_t skip = rng() % 15; skip > 0 && (missing & (missing - 1)); --skip) {
            missing &= missing - 1;  // drop low bits to pick a random absent edge
        }
        HypergraphBits hb = from_basis_index(params.map(), x);
        HypergraphBits grown = from_basis_index(params.map(), x | (missing & -missing));
        CHECK(count_cliques(params, grown) >= count_cliques(params, hb));
        CHECK(count_independent_sets(params, grown) <= count_independent_sets(params, hb));
    }
}

TEST_CASE("degenerate orders are rejected") {
    CHECK_THROWS_AS(CostParams(5, 1, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(CostParams(5, 3, 2, 3), std::invalid_argument);
}

TEST_CASE("fewer vertices than the arity means zero cost") {
    CostParams params(2, 3, 3, 3);
    CHECK(params.map().length() == 0);
    CHECK(cost(params, HypergraphBits(params.map())) == 0);
}

TEST_CASE("mismatched encodings are rejected") {
    CostParams params(5, 3, 3, 2);
    HypergraphBits other(EdgeIndexMap(6, 2));
    CHECK_THROWS_AS(cost(params, other), std::invalid_argument);
}

TEST_CASE("packed evaluation matches the general path") {
    CostParams params(5, 3, 4, 2);
    for (std::uint64_t x = 0; x < 1024; ++x) {
        CHECK(cost_of_index(params, x) == cost(params, from_basis_index(params.map(), x)));
    }
}
