#include "ramsey/binomial.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace ramsey {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (n - k < k) k = n - k;

    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // c = c * (n - k + i) / i is exact at every step. Strip the common
        // factor first so the multiply overflows only if the intermediate
        // binomial C(n - k + i, i) itself exceeds 64 bits.
        std::uint64_t num = n - k + i;
        std::uint64_t g = std::gcd(num, i);
        std::uint64_t den = i / g;
        num /= g;
        c /= den;
        if (__builtin_mul_overflow(c, num, &c)) {
            throw std::overflow_error("binomial(" + std::to_string(n) + ", " +
                                      std::to_string(k) + ") exceeds 64-bit range");
        }
    }
    return c;
}

}  // namespace ramsey
