#pragma once

#include <cstdint>
#include <vector>

#include "ramsey/bits.hpp"
#include "ramsey/codec.hpp"

namespace ramsey {

// Precomputed mask structures for the Ramsey cost
//
//   h(x) = #(complete m-vertex subhypergraphs) + #(n-independent sets).
//
// For every m-subset S of {1..N} there is one clique mask: the OR of
// the bit positions of all C(m, r) r-subsets of S. A clique is counted
// when all masked bits are set; an independent set when all are clear.
// This is equivalent to the arithmetic products over {0,1} bits, and
// makes exhaustive search over 2^L strings cheap.
class CostParams {
public:
    CostParams(unsigned vertex_count, unsigned clique_order, unsigned independent_order,
               unsigned arity);

    const EdgeIndexMap& map() const { return map_; }
    unsigned vertex_count() const { return map_.vertex_count(); }
    unsigned arity() const { return map_.arity(); }
    unsigned clique_order() const { return clique_order_; }
    unsigned independent_order() const { return independent_order_; }

    const std::vector<Bits>& clique_masks() const { return clique_masks_; }
    const std::vector<Bits>& independent_masks() const { return independent_masks_; }

    // Single-word views, available when L <= 64 (always for instances
    // small enough to search or simulate).
    const std::vector<std::uint64_t>& clique_words() const { return clique_words_; }
    const std::vector<std::uint64_t>& independent_words() const { return independent_words_; }

    std::uint64_t max_cost() const;  // C(N, m) + C(N, n)

private:
    EdgeIndexMap map_;
    unsigned clique_order_;
    unsigned independent_order_;
    std::vector<Bits> clique_masks_;
    std::vector<Bits> independent_masks_;
    std::vector<std::uint64_t> clique_words_;
    std::vector<std::uint64_t> independent_words_;
};

std::uint64_t count_cliques(const CostParams& params, const HypergraphBits& hb);
std::uint64_t count_independent_sets(const CostParams& params, const HypergraphBits& hb);
std::uint64_t cost(const CostParams& params, const HypergraphBits& hb);

// Fast path over the packed basis index; requires L <= 64.
std::uint64_t cost_of_index(const CostParams& params, std::uint64_t x);

}  // namespace ramsey
