#include "ramsey/oracle.hpp"

#include <stdexcept>
#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

MinimizeResult minimize(const CostParams& params, unsigned max_bits) {
    const std::uint64_t bits = params.map().length();
    if (bits > max_bits || bits > 63) {
        throw InstanceTooLargeError(bits, max_bits,
                                    "exhaustive search needs " + std::to_string(bits) +
                                        " bits, limit is " + std::to_string(max_bits));
    }

    std::uint64_t best = cost_of_index(params, 0);
    std::uint64_t best_x = 0;
    const std::uint64_t end = 1ull << bits;
    for (std::uint64_t x = 1; x < end && best > 0; ++x) {
        std::uint64_t c = cost_of_index(params, x);
        if (c < best) {
            best = c;
            best_x = x;
        }
    }
    return MinimizeResult{best, from_basis_index(params.map(), best_x)};
}

ClassicalRamseyResult ramsey_classical(unsigned m, unsigned n, unsigned r, unsigned low,
                                       unsigned max_bits) {
    if (low < 1) throw std::invalid_argument("lower bound must be >= 1");

    ClassicalRamseyResult result{};
    for (unsigned vertices = low;; ++vertices) {
        CostParams params(vertices, m, n, r);
        MinimizeResult min = minimize(params, max_bits);
        result.trace.emplace_back(vertices, min.min_cost);
        if (min.min_cost > 0) {
            result.ramsey_number = vertices;
            return result;
        }
    }
}

}  // namespace ramsey
