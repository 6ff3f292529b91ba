#include "ramsey/codec.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "ramsey/binomial.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

EdgeIndexMap::EdgeIndexMap(unsigned vertex_count, unsigned arity)
    : vertex_count_(vertex_count), arity_(arity), length_(binomial(vertex_count, arity)) {
    if (vertex_count < 1) throw std::invalid_argument("vertex count must be >= 1");
    if (arity < 1) throw std::invalid_argument("edge arity must be >= 1");
}

namespace {

// Validates and returns the edge as an ascending tuple.
Edge normalized(const EdgeIndexMap& map, const Edge& edge) {
    if (edge.size() != map.arity()) {
        throw std::invalid_argument("edge has " + std::to_string(edge.size()) +
                                    " vertices, expected " + std::to_string(map.arity()));
    }
    Edge sorted = edge;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1 || sorted[i] > map.vertex_count()) {
            throw std::invalid_argument("vertex " + std::to_string(sorted[i]) +
                                        " outside 1.." + std::to_string(map.vertex_count()));
        }
        if (i > 0 && sorted[i] == sorted[i - 1]) {
            throw std::invalid_argument("edge repeats vertex " + std::to_string(sorted[i]));
        }
    }
    return sorted;
}

}  // namespace

std::uint64_t EdgeIndexMap::rank(const Edge& edge) const {
    Edge v = normalized(*this, edge);
    // Count ascending tuples that precede v lexicographically: tuples that
    // agree on the first j entries and take a smaller value next.
    std::uint64_t before = 0;
    unsigned prev = 0;
    for (unsigned j = 0; j < arity_; ++j) {
        for (unsigned w = prev + 1; w < v[j]; ++w) {
            before += binomial(vertex_count_ - w, arity_ - 1 - j);
        }
        prev = v[j];
    }
    return before + 1;
}

Edge EdgeIndexMap::unrank(std::uint64_t k) const {
    if (k < 1 || k > length_) {
        throw std::out_of_range("edge index " + std::to_string(k) + " outside 1.." +
                                std::to_string(length_));
    }
    std::uint64_t remaining = k - 1;
    Edge v(arity_);
    unsigned w = 1;
    for (unsigned j = 0; j < arity_; ++j) {
        for (;; ++w) {
            std::uint64_t block = binomial(vertex_count_ - w, arity_ - 1 - j);
            if (remaining < block) break;
            remaining -= block;
        }
        v[j] = w++;
    }
    return v;
}

HypergraphBits::HypergraphBits(EdgeIndexMap map, Bits bits) : map_(map), bits_(std::move(bits)) {
    if (bits_.size() != map_.length()) {
        throw std::invalid_argument("bit-string length " + std::to_string(bits_.size()) +
                                    " does not match C(N, r) = " + std::to_string(map_.length()));
    }
}

HypergraphBits::HypergraphBits(EdgeIndexMap map)
    : map_(map), bits_(static_cast<std::size_t>(map.length())) {}

HypergraphBits encode(const EdgeIndexMap& map, const std::vector<Edge>& edges) {
    HypergraphBits hb(map);
    for (const Edge& e : edges) hb.set_edge(map.rank(e));
    return hb;
}

std::vector<Edge> decode(const HypergraphBits& hb) {
    std::vector<Edge> edges;
    for (std::uint64_t k = 1; k <= hb.map().length(); ++k) {
        if (hb.has_edge(k)) edges.push_back(hb.map().unrank(k));
    }
    return edges;
}

HypergraphBits from_basis_index(const EdgeIndexMap& map, std::uint64_t index) {
    return HypergraphBits(map, Bits::from_index(static_cast<std::size_t>(map.length()), index));
}

std::uint64_t to_basis_index(const HypergraphBits& hb) { return hb.bits().to_index(); }

std::string to_edge_list_text(const HypergraphBits& hb) {
    std::ostringstream out;
    out << hb.map().vertex_count() << ' ' << hb.map().arity() << '\n';
    for (const Edge& e : decode(hb)) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i > 0) out << ' ';
            out << e[i];
        }
        out << '\n';
    }
    return out.str();
}

HypergraphBits parse_edge_list_text(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    unsigned n = 0, r = 0;
    bool have_header = false;
    std::vector<std::pair<std::size_t, Edge>> edges;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        if (!have_header) {
            if (!(fields >> n >> r)) throw ParseError(line_no, "expected header \"N r\"");
            std::string extra;
            if (fields >> extra) throw ParseError(line_no, "unexpected token \"" + extra + "\" after header");
            have_header = true;
            continue;
        }
        Edge e;
        unsigned v;
        while (fields >> v) e.push_back(v);
        if (!fields.eof()) throw ParseError(line_no, "malformed vertex in edge line");
        if (e.empty()) continue;  // blank line
        edges.emplace_back(line_no, std::move(e));
    }
    if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing header \"N r\"");

    EdgeIndexMap map(n, r);
    HypergraphBits hb(map);
    for (const auto& [at_line, e] : edges) {
        try {
            hb.set_edge(map.rank(e));
        } catch (const std::invalid_argument& ex) {
            throw ParseError(at_line, ex.what());
        }
    }
    return hb;
}

std::string to_bit_string(const HypergraphBits& hb) { return hb.bits().to_string(); }

HypergraphBits parse_bit_string(const EdgeIndexMap& map, const std::string& text) {
    if (text.size() != map.length()) {
        throw std::invalid_argument("bit string has length " + std::to_string(text.size()) +
                                    ", expected C(N, r) = " + std::to_string(map.length()));
    }
    return HypergraphBits(map, Bits::from_string(text));
}

}  // namespace ramsey
