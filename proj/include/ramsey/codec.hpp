#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ramsey/bits.hpp"

namespace ramsey {

// An edge is a set of r distinct vertices from {1..N}, in any order.
using Edge = std::vector<unsigned>;

// Bijection between the r-subsets of {1..N} and edge indices {1..L},
// L = C(N, r). Edges are ordered lexicographically by their ascending
// vertex tuples; for N=4, r=2 this gives (1,2),(1,3),(1,4),(2,3),
// (2,4),(3,4). r > N is allowed and yields L = 0.
class EdgeIndexMap {
public:
    EdgeIndexMap(unsigned vertex_count, unsigned arity);

    unsigned vertex_count() const { return vertex_count_; }
    unsigned arity() const { return arity_; }
    std::uint64_t length() const { return length_; }

    // 1-based position of an edge in the ordering above.
    std::uint64_t rank(const Edge& edge) const;
    // Inverse of rank; returns ascending vertices. Requires 1 <= k <= L.
    Edge unrank(std::uint64_t k) const;

    bool operator==(const EdgeIndexMap&) const = default;

private:
    unsigned vertex_count_;
    unsigned arity_;
    std::uint64_t length_;
};

// An r-uniform hypergraph on {1..N} as a bit string of length L: bit k
// (1-based) is 1 iff the k-th edge is present. Bit k is stored at
// position k-1, so for L <= 64 the packed word doubles as the
// computational-basis index of the matching quantum register state.
class HypergraphBits {
public:
    HypergraphBits(EdgeIndexMap map, Bits bits);
    explicit HypergraphBits(EdgeIndexMap map);  // empty hypergraph

    const EdgeIndexMap& map() const { return map_; }
    const Bits& bits() const { return bits_; }

    bool has_edge(std::uint64_t k) const { return bits_.test(k - 1); }
    void set_edge(std::uint64_t k, bool present = true) { bits_.set(k - 1, present); }
    std::size_t edge_count() const { return bits_.count(); }

    bool operator==(const HypergraphBits&) const = default;

private:
    EdgeIndexMap map_;
    Bits bits_;
};

HypergraphBits encode(const EdgeIndexMap& map, const std::vector<Edge>& edges);
std::vector<Edge> decode(const HypergraphBits& hb);

// Basis-state view: bit k of the hypergraph string is bit k-1 of the
// integer index. Requires L <= 64.
HypergraphBits from_basis_index(const EdgeIndexMap& map, std::uint64_t index);
std::uint64_t to_basis_index(const HypergraphBits& hb);

// Edge-list text: header line "N r", then one line per present edge
// with ascending space-separated vertices.
std::string to_edge_list_text(const HypergraphBits& hb);
HypergraphBits parse_edge_list_text(std::istream& in);

// Raw bit-string text: '0'/'1' characters, bit 1 first.
std::string to_bit_string(const HypergraphBits& hb);
HypergraphBits parse_bit_string(const EdgeIndexMap& map, const std::string& text);

}  // namespace ramsey
