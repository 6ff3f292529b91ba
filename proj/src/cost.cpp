#include "ramsey/cost.hpp"

#include <stdexcept>
#include <string>

#include "ramsey/binomial.hpp"

namespace ramsey {

namespace {

// Visits every k-subset of {1..n} in lexicographic order.
template <typename Fn>
void for_each_subset(unsigned n, unsigned k, Fn&& fn) {
    if (k > n) return;
    std::vector<unsigned> pick(k);
    for (unsigned i = 0; i < k; ++i) pick[i] = i + 1;
    for (;;) {
        fn(pick);
        // advance the odometer
        unsigned i = k;
        while (i > 0 && pick[i - 1] == n - k + i) --i;
        if (i == 0) return;
        ++pick[i - 1];
        for (unsigned j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

std::vector<Bits> build_masks(const EdgeIndexMap& map, unsigned order) {
    std::vector<Bits> masks;
    masks.reserve(static_cast<std::size_t>(binomial(map.vertex_count(), order)));
    const unsigned r = map.arity();
    for_each_subset(map.vertex_count(), order, [&](const std::vector<unsigned>& subset) {
        Bits mask(static_cast<std::size_t>(map.length()));
        for_each_subset(order, r, [&](const std::vector<unsigned>& pos) {
            Edge e(r);
            for (unsigned i = 0; i < r; ++i) e[i] = subset[pos[i] - 1];
            mask.set(static_cast<std::size_t>(map.rank(e) - 1));
        });
        masks.push_back(std::move(mask));
    });
    return masks;
}

void check_same_instance(const CostParams& params, const HypergraphBits& hb) {
    if (!(hb.map() == params.map())) {
        throw std::invalid_argument("hypergraph encoded for different (N, r) than the cost parameters");
    }
}

}  // namespace

CostParams::CostParams(unsigned vertex_count, unsigned clique_order, unsigned independent_order,
                       unsigned arity)
    : map_(vertex_count, arity), clique_order_(clique_order), independent_order_(independent_order) {
    if (clique_order < arity) {
        throw std::invalid_argument("clique order m = " + std::to_string(clique_order) +
                                    " must be >= edge arity r = " + std::to_string(arity));
    }
    if (independent_order < arity) {
        throw std::invalid_argument("independent-set order n = " + std::to_string(independent_order) +
                                    " must be >= edge arity r = " + std::to_string(arity));
    }
    clique_masks_ = build_masks(map_, clique_order_);
    independent_masks_ = build_masks(map_, independent_order_);
    if (map_.length() <= 64) {
        clique_words_.reserve(clique_masks_.size());
        for (const Bits& m : clique_masks_) clique_words_.push_back(m.to_index());
        independent_words_.reserve(independent_masks_.size());
        for (const Bits& m : independent_masks_) independent_words_.push_back(m.to_index());
    }
}

std::uint64_t CostParams::max_cost() const {
    return binomial(vertex_count(), clique_order_) + binomial(vertex_count(), independent_order_);
}

std::uint64_t count_cliques(const CostParams& params, const HypergraphBits& hb) {
    check_same_instance(params, hb);
    std::uint64_t total = 0;
    for (const Bits& mask : params.clique_masks()) {
        if (hb.bits().contains_all(mask)) ++total;
    }
    return total;
}

std::uint64_t count_independent_sets(const CostParams& params, const HypergraphBits& hb) {
    check_same_instance(params, hb);
    std::uint64_t total = 0;
    for (const Bits& mask : params.independent_masks()) {
        if (hb.bits().disjoint(mask)) ++total;
    }
    return total;
}

std::uint64_t cost(const CostParams& params, const HypergraphBits& hb) {
    return count_cliques(params, hb) + count_independent_sets(params, hb);
}

std::uint64_t cost_of_index(const CostParams& params, std::uint64_t x) {
    if (params.map().length() > 64) {
        throw std::length_error("packed cost evaluation requires L <= 64");
    }
    std::uint64_t total = 0;
    for (std::uint64_t mask : params.clique_words()) {
        if ((x & mask) == mask) ++total;
    }
    for (std::uint64_t mask : params.independent_words()) {
        if ((x & mask) == 0) ++total;
    }
    return total;
}

}  // namespace ramsey
