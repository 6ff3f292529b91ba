#include "ramsey/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

using complexd = std::complex<double>;

void check_dimensions(unsigned qubit_count, std::size_t entries, const char* what) {
    if (entries != (std::size_t{1} << qubit_count)) {
        throw std::invalid_argument(std::string(what) + " holds " + std::to_string(entries) +
                                    " entries, expected 2^" + std::to_string(qubit_count));
    }
}

void check_qubit_limit(std::uint64_t qubit_count, unsigned max_qubits) {
    if (qubit_count > max_qubits || qubit_count >= 63) {
        throw InstanceTooLargeError(qubit_count, max_qubits,
                                    "state vector needs " + std::to_string(qubit_count) +
                                        " qubits, limit is " + std::to_string(max_qubits));
    }
}

// Multiplies every amplitude by exp(-i * angle * h(x)). Integer-valued
// diagonals go through a small phase table instead of one exp per
// amplitude.
void apply_diagonal_phase(std::vector<complexd>& amp, const std::vector<double>& values,
                          const std::vector<std::uint32_t>& int_values, double angle) {
    if (!int_values.empty()) {
        std::uint32_t top = *std::max_element(int_values.begin(), int_values.end());
        std::vector<complexd> phase(top + 1);
        for (std::uint32_t v = 0; v <= top; ++v) {
            phase[v] = std::polar(1.0, -angle * v);
        }
        for (std::size_t x = 0; x < amp.size(); ++x) amp[x] *= phase[int_values[x]];
    } else {
        for (std::size_t x = 0; x < amp.size(); ++x) {
            amp[x] *= std::polar(1.0, -angle * values[x]);
        }
    }
}

// Exact propagator of the driver over one step: exp(-i * theta * H_i)
// factors into commuting per-qubit rotations
//   exp(-i theta (I - sigma_x)/2) = a I + b sigma_x,
// a = (1 + e^{-i theta})/2, b = (1 - e^{-i theta})/2.
void apply_driver_propagator(std::vector<complexd>& amp, unsigned qubit_count, double theta) {
    const complexd phase = std::polar(1.0, -theta);
    const complexd a = 0.5 * (1.0 + phase);
    const complexd b = 0.5 * (1.0 - phase);
    for (unsigned q = 0; q < qubit_count; ++q) {
        const std::size_t stride = std::size_t{1} << q;
        for (std::size_t base = 0; base < amp.size(); base += 2 * stride) {
            for (std::size_t offset = 0; offset < stride; ++offset) {
                complexd& lo = amp[base + offset];
                complexd& hi = amp[base + offset + stride];
                const complexd new_lo = a * lo + b * hi;
                hi = b * lo + a * hi;
                lo = new_lo;
            }
        }
    }
}

// Indices of the minimum-value subspace, for the trace columns.
std::vector<std::uint64_t> ground_indices(const DiagonalHamiltonian& hp) {
    const double ground = hp.min_value();
    std::vector<std::uint64_t> idx;
    for (std::size_t x = 0; x < hp.values.size(); ++x) {
        if (hp.values[x] == ground) idx.push_back(x);
    }
    return idx;
}

}  // namespace

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const complexd& a : amplitudes) total += std::norm(a);
    return total;
}

DiagonalHamiltonian DiagonalHamiltonian::from_cost(const CostParams& params, unsigned max_qubits) {
    const std::uint64_t qubits = params.map().length();
    check_qubit_limit(qubits, max_qubits);
    DiagonalHamiltonian hp;
    hp.qubit_count = static_cast<unsigned>(qubits);
    hp.values.resize(std::size_t{1} << qubits);
    for (std::uint64_t x = 0; x < hp.values.size(); ++x) {
        hp.values[x] = static_cast<double>(cost_of_index(params, x));
    }
    return hp;
}

DiagonalHamiltonian DiagonalHamiltonian::from_pauli(const PauliPolynomial& poly,
                                                    unsigned max_qubits) {
    check_qubit_limit(poly.qubit_count, max_qubits);
    DiagonalHamiltonian hp;
    hp.qubit_count = static_cast<unsigned>(poly.qubit_count);
    hp.values.resize(std::size_t{1} << poly.qubit_count);
    for (std::uint64_t x = 0; x < hp.values.size(); ++x) {
        hp.values[x] = poly.eval(x);
    }
    return hp;
}

double DiagonalHamiltonian::min_value() const {
    if (values.empty()) throw std::logic_error("empty Hamiltonian");
    return *std::min_element(values.begin(), values.end());
}

StateVector prepare_uniform(unsigned qubit_count, unsigned max_qubits) {
    if (qubit_count < 1) throw std::invalid_argument("need at least one qubit");
    check_qubit_limit(qubit_count, max_qubits);
    StateVector state;
    state.qubit_count = qubit_count;
    state.amplitudes.assign(std::size_t{1} << qubit_count,
                            std::pow(2.0, -0.5 * static_cast<double>(qubit_count)));
    return state;
}

StateVector apply_driver(const StateVector& state) {
    check_dimensions(state.qubit_count, state.amplitudes.size(), "state vector");
    const unsigned L = state.qubit_count;
    StateVector out;
    out.qubit_count = L;
    out.amplitudes.resize(state.amplitudes.size());
    for (std::size_t x = 0; x < state.amplitudes.size(); ++x) {
        complexd flipped_sum = 0.0;
        for (unsigned q = 0; q < L; ++q) {
            flipped_sum += state.amplitudes[x ^ (std::size_t{1} << q)];
        }
        out.amplitudes[x] = 0.5 * (static_cast<double>(L) * state.amplitudes[x] - flipped_sum);
    }
    return out;
}

StateVector evolve(const StateVector& state, const DiagonalHamiltonian& hp,
                   const Schedule& schedule, const EvolveOptions& options) {
    check_dimensions(state.qubit_count, state.amplitudes.size(), "state vector");
    check_dimensions(hp.qubit_count, hp.values.size(), "diagonal Hamiltonian");
    if (hp.qubit_count != state.qubit_count) {
        throw std::invalid_argument("state and Hamiltonian qubit counts differ");
    }
    if (schedule.total_time <= 0.0) throw std::invalid_argument("runtime T must be positive");
    if (schedule.steps < 1) throw std::invalid_argument("need at least one step");

    const double dt = schedule.total_time / schedule.steps;
    const unsigned L = state.qubit_count;

    // Integer view of the diagonal enables the phase table fast path.
    std::vector<std::uint32_t> int_values;
    {
        bool integral = true;
        for (double v : hp.values) {
            if (!(v >= 0.0) || v > 4e9 || v != std::floor(v)) {
                integral = false;
                break;
            }
        }
        if (integral) {
            int_values.reserve(hp.values.size());
            for (double v : hp.values) int_values.push_back(static_cast<std::uint32_t>(v));
        }
    }

    const double peak_energy =
        std::max(static_cast<double>(L), *std::max_element(hp.values.begin(), hp.values.end()));
    if (dt * peak_energy > std::numbers::pi) {
        std::ostream& warn = options.warnings ? *options.warnings : std::cerr;
        warn << "warning: step size " << dt << " gives per-step phase " << dt * peak_energy
             << " > pi; increase steps to resolve the dynamics\n";
    }

    std::vector<std::uint64_t> ground;
    if (options.trace) {
        ground = ground_indices(hp);
        *options.trace << "# step t s norm energy_expectation ground_population\n";
    }

    StateVector out = state;
    for (unsigned step = 0; step < schedule.steps; ++step) {
        // midpoint schedule value for this step
        const double s_mid = (step + 0.5) / schedule.steps;

        apply_diagonal_phase(out.amplitudes, hp.values, int_values, 0.5 * dt * s_mid);
        apply_driver_propagator(out.amplitudes, L, dt * (1.0 - s_mid));
        apply_diagonal_phase(out.amplitudes, hp.values, int_values, 0.5 * dt * s_mid);

        if (options.trace) {
            const double t = (step + 1) * dt;
            double pop = 0.0;
            for (std::uint64_t x : ground) pop += std::norm(out.amplitudes[x]);
            char row[192];
            std::snprintf(row, sizeof row, "%u %.10g %.10g %.17g %.12g %.12g\n", step + 1, t,
                          t / schedule.total_time, std::sqrt(out.norm_squared()),
                          energy_expectation(hp, out), pop);
            *options.trace << row;
        }
    }
    return out;
}

std::uint64_t sample(const StateVector& state, std::uint64_t rng_seed) {
    check_dimensions(state.qubit_count, state.amplitudes.size(), "state vector");
    std::mt19937_64 rng(rng_seed);
    // uniform in [0, 1) built from the top 53 bits, identical across
    // platforms (std::uniform_real_distribution is not)
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    double cumulative = 0.0;
    for (std::size_t x = 0; x < state.amplitudes.size(); ++x) {
        cumulative += std::norm(state.amplitudes[x]);
        if (u < cumulative) return x;
    }
    return state.amplitudes.size() - 1;
}

double measure_energy(const DiagonalHamiltonian& hp, std::uint64_t basis_index) {
    if (basis_index >= hp.values.size()) {
        throw std::out_of_range("basis index " + std::to_string(basis_index) + " outside 2^" +
                                std::to_string(hp.qubit_count) + " states");
    }
    return hp.values[basis_index];
}

double energy_expectation(const DiagonalHamiltonian& hp, const StateVector& state) {
    if (hp.qubit_count != state.qubit_count) {
        throw std::invalid_argument("state and Hamiltonian qubit counts differ");
    }
    double total = 0.0;
    for (std::size_t x = 0; x < state.amplitudes.size(); ++x) {
        total += hp.values[x] * std::norm(state.amplitudes[x]);
    }
    return total;
}

double ground_population(const DiagonalHamiltonian& hp, const StateVector& state) {
    if (hp.qubit_count != state.qubit_count) {
        throw std::invalid_argument("state and Hamiltonian qubit counts differ");
    }
    const double ground = hp.min_value();
    double pop = 0.0;
    for (std::size_t x = 0; x < state.amplitudes.size(); ++x) {
        if (hp.values[x] == ground) pop += std::norm(state.amplitudes[x]);
    }
    return pop;
}

}  // namespace ramsey
