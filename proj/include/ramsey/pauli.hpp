#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ramsey/cost.hpp"

namespace ramsey {

// A real-coefficient sum of products of Pauli-Z operators. Keys are
// ascending 1-based qubit indices (edge indices); the empty key is the
// identity term. Zero-coefficient terms are dropped when built by the
// compiler or the parser.
struct PauliPolynomial {
    std::uint64_t qubit_count = 0;
    std::map<std::vector<std::uint32_t>, double> terms;

    // Diagonal matrix element on a basis state, with Z|0> = +|0>,
    // Z|1> = -|1> and qubit q read from bit q-1 of the index.
    double eval(std::uint64_t basis_index) const;

    // Largest support over surviving terms; 0 for an empty or
    // identity-only polynomial.
    std::uint32_t max_locality() const;

    bool operator==(const PauliPolynomial&) const = default;
};

inline constexpr std::uint64_t kDefaultTermBudget = 1ull << 24;

// Every term the expansion touches acts on at most this many qubits:
// max(C(m, r), C(n, r)).
std::uint64_t locality_bound(const CostParams& params);

// Expands the cost into Z operators via x_k -> (1 - Z_k)/2 per clique
// mask and 1 - x_k -> (1 + Z_k)/2 per independent mask, merging like
// terms with exact dyadic arithmetic. The result is diagonal and
// satisfies eval(x) == cost(x) on every basis state. Throws
// TooManyTermsError when the pre-merge expansion exceeds the budget.
PauliPolynomial compile_cost_hamiltonian(const CostParams& params,
                                         std::uint64_t term_budget = kDefaultTermBudget);

// Term-list text: header "pauli-z L=<L>", then one term per line as
// "coeff q1 q2 ... qk" with ascending indices; the identity term has no
// indices; '#' starts a comment line.
std::string emit(const PauliPolynomial& poly);
PauliPolynomial parse_pauli_text(std::istream& in);

}  // namespace ramsey
