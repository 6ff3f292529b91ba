#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ramsey/cost.hpp"
#include "ramsey/pauli.hpp"

namespace ramsey {

inline constexpr unsigned kDefaultSimulableQubits = 24;

struct StateVector {
    unsigned qubit_count = 0;
    std::vector<std::complex<double>> amplitudes;  // 2^L entries

    double norm_squared() const;
};

// Diagonal of the problem Hamiltonian in the computational basis:
// values[x] is the cost of the hypergraph packed into index x.
struct DiagonalHamiltonian {
    unsigned qubit_count = 0;
    std::vector<double> values;  // 2^L entries

    static DiagonalHamiltonian from_cost(const CostParams& params,
                                         unsigned max_qubits = kDefaultSimulableQubits);
    // Load path for externally produced term lists; evaluates the
    // polynomial once per basis state.
    static DiagonalHamiltonian from_pauli(const PauliPolynomial& poly,
                                          unsigned max_qubits = kDefaultSimulableQubits);

    double min_value() const;
};

// Linear interpolation H(t) = (1 - t/T) H_i + (t/T) H_p over t in [0, T].
struct Schedule {
    double total_time = 100.0;  // T, in units with hbar = 1
    unsigned steps = 2000;
};

struct EvolveOptions {
    // Per-step rows "step t s norm energy_expectation ground_population";
    // a '#' header line is written first.
    std::ostream* trace = nullptr;
    // Aliasing diagnostics; defaults to stderr when null.
    std::ostream* warnings = nullptr;
};

// Uniform superposition over all 2^L basis states, the ground state of
// the driver Hamiltonian.
StateVector prepare_uniform(unsigned qubit_count, unsigned max_qubits = kDefaultSimulableQubits);

// Action of the driver H_i = sum_l (I - sigma_x^l)/2, matrix-free.
StateVector apply_driver(const StateVector& state);

// Integrates i dpsi/dt = H(t) psi from 0 to T with per-step Strang
// splitting: exact diagonal phases for half a step, an exact per-qubit
// driver rotation for the full step, then the second diagonal half.
StateVector evolve(const StateVector& state, const DiagonalHamiltonian& hp,
                   const Schedule& schedule, const EvolveOptions& options = {});

// Projective computational-basis measurement; deterministic per seed.
std::uint64_t sample(const StateVector& state, std::uint64_t rng_seed);

// Energy of a sampled basis state: exact classical evaluation, so a
// result of 0 certifies a zero-cost coloring.
double measure_energy(const DiagonalHamiltonian& hp, std::uint64_t basis_index);

double energy_expectation(const DiagonalHamiltonian& hp, const StateVector& state);

// Total weight on the minimum-value subspace of hp.
double ground_population(const DiagonalHamiltonian& hp, const StateVector& state);

}  // namespace ramsey
