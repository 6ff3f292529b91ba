#include "ramsey/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "ramsey/binomial.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

double PauliPolynomial::eval(std::uint64_t basis_index) const {
    if (qubit_count > 64) {
        throw std::length_error("basis-state evaluation requires L <= 64");
    }
    if (qubit_count < 64 && basis_index >= (1ull << qubit_count)) {
        throw std::out_of_range("basis index " + std::to_string(basis_index) +
                                " outside 2^" + std::to_string(qubit_count) + " states");
    }
    double total = 0.0;
    for (const auto& [support, coeff] : terms) {
        int sign = 1;
        for (std::uint32_t q : support) {
            if ((basis_index >> (q - 1)) & 1ull) sign = -sign;
        }
        total += sign * coeff;
    }
    return total;
}

std::uint32_t PauliPolynomial::max_locality() const {
    std::size_t widest = 0;
    for (const auto& [support, coeff] : terms) widest = std::max(widest, support.size());
    return static_cast<std::uint32_t>(widest);
}

std::uint64_t locality_bound(const CostParams& params) {
    return std::max(binomial(params.clique_order(), params.arity()),
                    binomial(params.independent_order(), params.arity()));
}

namespace {

// Extracts the 1-based qubit indices of the set bits of a mask.
std::vector<std::uint32_t> mask_qubits(const Bits& mask) {
    std::vector<std::uint32_t> qubits;
    for (std::size_t p = 0; p < mask.size(); ++p) {
        if (mask.test(p)) qubits.push_back(static_cast<std::uint32_t>(p + 1));
    }
    return qubits;
}

}  // namespace

PauliPolynomial compile_cost_hamiltonian(const CostParams& params, std::uint64_t term_budget) {
    const std::uint64_t clique_support = binomial(params.clique_order(), params.arity());
    const std::uint64_t indep_support = binomial(params.independent_order(), params.arity());
    const std::uint64_t denominator_log2 = std::max(clique_support, indep_support);

    // Pre-merge expansion size: one term per subset of each mask.
    std::uint64_t projected = 0;
    bool overflow = denominator_log2 >= 63;
    if (!overflow) {
        std::uint64_t a, b;
        overflow = __builtin_mul_overflow(params.clique_masks().size(),
                                          1ull << clique_support, &a) ||
                   __builtin_mul_overflow(params.independent_masks().size(),
                                          1ull << indep_support, &b) ||
                   __builtin_add_overflow(a, b, &projected);
    }
    if (overflow || projected > term_budget) {
        throw TooManyTermsError(overflow ? 0 : projected, term_budget,
                                "expansion would touch " +
                                    (overflow ? std::string("more than 2^63")
                                              : std::to_string(projected)) +
                                    " terms, budget is " + std::to_string(term_budget));
    }

    // Coefficients are exact multiples of 2^-D with D = max mask size, so
    // like terms cancel exactly in integer arithmetic.
    std::map<std::vector<std::uint32_t>, std::int64_t> numerators;

    auto expand = [&](const Bits& mask, bool plus_sign) {
        const std::vector<std::uint32_t> qubits = mask_qubits(mask);
        const std::uint64_t size = qubits.size();
        const std::int64_t unit = std::int64_t{1}
                                  << (denominator_log2 - size);  // 2^(D-s)
        std::vector<std::uint32_t> support;
        for (std::uint64_t subset = 0; subset < (1ull << size); ++subset) {
            support.clear();
            for (std::uint64_t i = 0; i < size; ++i) {
                if ((subset >> i) & 1ull) support.push_back(qubits[i]);
            }
            const bool negate = !plus_sign && (std::popcount(subset) % 2 == 1);
            numerators[support] += negate ? -unit : unit;
        }
    };

    // clique product (1-Z)/2 alternates sign with |subset|; independent
    // product (1+Z)/2 keeps every sign positive.

    for (const Bits& mask : params.clique_masks()) expand(mask, /*plus_sign=*/false);
    for (const Bits& mask : params.independent_masks()) expand(mask, /*plus_sign=*/true);

    PauliPolynomial poly;
    poly.qubit_count = params.map().length();
    const double scale = std::ldexp(1.0, -static_cast<int>(denominator_log2));
    for (const auto& [support, numerator] : numerators) {
        if (numerator != 0) poly.terms.emplace(support, numerator * scale);
    }
    return poly;
}

std::string emit(const PauliPolynomial& poly) {
    std::ostringstream out;
    out << "pauli-z L=" << poly.qubit_count << '\n';
    char buf[64];
    for (const auto& [support, coeff] : poly.terms) {
        std::snprintf(buf, sizeof buf, "%.17g", coeff);
        out << buf;
        for (std::uint32_t q : support) out << ' ' << q;
        out << '\n';
    }
    return out.str();
}

PauliPolynomial parse_pauli_text(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) throw ParseError(1, "missing \"pauli-z L=<L>\" header");
    ++line_no;
    std::uint64_t qubits = 0;
    {
        std::istringstream header(line);
        std::string tag;
        header >> tag;
        if (tag != "pauli-z") throw ParseError(line_no, "expected \"pauli-z\" header tag");
        std::string field;
        header >> field;
        if (field.rfind("L=", 0) != 0) throw ParseError(line_no, "expected L=<qubit count>");
        try {
            qubits = std::stoull(field.substr(2));
        } catch (const std::exception&) {
            throw ParseError(line_no, "malformed qubit count \"" + field + "\"");
        }
    }

    PauliPolynomial poly;
    poly.qubit_count = qubits;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream fields(line);
        std::string coeff_text;
        fields >> coeff_text;
        double coeff = 0.0;
        try {
            std::size_t used = 0;
            coeff = std::stod(coeff_text, &used);
            if (used != coeff_text.size()) throw std::invalid_argument(coeff_text);
        } catch (const std::exception&) {
            throw ParseError(line_no, "malformed coefficient \"" + coeff_text + "\"");
        }
        if (!std::isfinite(coeff)) throw ParseError(line_no, "coefficient must be finite");

        std::vector<std::uint32_t> support;
        std::uint64_t q = 0;
        while (fields >> q) {
            if (q < 1 || q > qubits) {
                throw ParseError(line_no, "qubit index " + std::to_string(q) + " outside 1.." +
                                              std::to_string(qubits));
            }
            if (!support.empty() && q <= support.back()) {
                throw ParseError(line_no, "qubit indices must be strictly ascending");
            }
            support.push_back(static_cast<std::uint32_t>(q));
        }
        if (!fields.eof()) throw ParseError(line_no, "malformed qubit index");

        poly.terms[support] += coeff;
        if (poly.terms[support] == 0.0) poly.terms.erase(support);
    }
    return poly;
}

}  // namespace ramsey
