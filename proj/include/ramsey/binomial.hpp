#pragma once

#include <cstdint>

namespace ramsey {

// Exact C(n, k) in 64-bit integer arithmetic; C(n, k) = 0 for k > n.
// Throws std::overflow_error if the value does not fit in uint64_t.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace ramsey
