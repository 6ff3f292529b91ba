#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/codec.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/quantum.hpp"

namespace ramsey {

// Repetition count for the measurement stage: k = ceil(ln(1-delta) /
// ln(epsilon)) runs detect a zero-cost state with probability >= delta
// when a single run succeeds with probability >= 1 - epsilon.
struct RepetitionPolicy {
    double epsilon = 0.5;
    double delta = 0.99;
    unsigned k_max = 64;
};

unsigned repetitions(const RepetitionPolicy& policy);

// True when the policy's requested confidence cannot be met within
// k_max runs; "min > 0" decisions made under a clamped count are only
// low-confidence evidence.
bool repetitions_clamped(const RepetitionPolicy& policy);

enum class Backend { oracle, aqe };

struct NRecord {
    unsigned vertex_count = 0;       // N
    std::uint64_t qubit_count = 0;   // L
    bool min_is_zero = false;
    bool low_confidence = false;     // only meaningful when !min_is_zero
    double best_energy = 0.0;        // for the oracle: the exact minimum
    unsigned runs_used = 0;
    std::optional<HypergraphBits> witness;  // zero-cost coloring, re-verified
    std::string witness_file;               // set by callers that write witnesses out
};

struct RamseyResult {
    unsigned ramsey_number = 0;
    Backend backend = Backend::oracle;
    std::vector<NRecord> per_n;
    bool low_confidence = false;  // any record flagged
};

struct AqeConfig {
    Schedule schedule{};
    RepetitionPolicy policy{};
    std::uint64_t seed = 12345;
    unsigned max_qubits = kDefaultSimulableQubits;
    // When non-empty, each evolution writes "<prefix>N<k>.txt".
    std::string trace_prefix;
};

// Per-run measurement seed, derived so the k repetitions at each N are
// independent streams of the master seed.
std::uint64_t derive_seed(std::uint64_t master, unsigned vertex_count, unsigned run);

// Algorithm driver over simulated adiabatic evolution: from `low`
// upward, evolve the uniform state under the interpolated Hamiltonian,
// then sample up to k times. A zero-energy sample is a certificate that
// the minimum is zero (the witness is re-verified classically); k
// nonzero samples are probabilistic evidence that N is the answer.
RamseyResult ramsey_aqe(unsigned m, unsigned n, unsigned r, unsigned low,
                        const AqeConfig& config = {});

// Same loop and report shape, decided by the exhaustive oracle.
RamseyResult ramsey_with_oracle(unsigned m, unsigned n, unsigned r, unsigned low,
                                unsigned max_bits = kDefaultExhaustiveBits);

unsigned default_low(unsigned m, unsigned n, unsigned r);

// One line per N: "N L decision bestEnergy runs witnessFile?", decision
// is "min=0", "min>0", or "min>0?" for a low-confidence call.
void write_report(const RamseyResult& result, std::ostream& out);

}  // namespace ramsey
