#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ramsey/codec.hpp"
#include "ramsey/cost.hpp"

namespace ramsey {

inline constexpr unsigned kDefaultExhaustiveBits = 30;

struct MinimizeResult {
    std::uint64_t min_cost;
    HypergraphBits witness;  // smallest basis index attaining min_cost
};

// Exact minimum of the cost over all 2^L bit strings, by enumeration in
// plain integer order with early exit once 0 is reached. Throws
// InstanceTooLargeError when L exceeds max_bits.
MinimizeResult minimize(const CostParams& params, unsigned max_bits = kDefaultExhaustiveBits);

struct ClassicalRamseyResult {
    unsigned ramsey_number;
    // (N, exact min cost) for every N visited, ending at ramsey_number.
    std::vector<std::pair<unsigned, std::uint64_t>> trace;
};

// Increments N from `low` until the exact minimum first becomes
// positive. The caller is responsible for `low` being a strict lower
// bound of the Ramsey number.
ClassicalRamseyResult ramsey_classical(unsigned m, unsigned n, unsigned r, unsigned low,
                                       unsigned max_bits = kDefaultExhaustiveBits);

}  // namespace ramsey
