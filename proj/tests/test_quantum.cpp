#include <doctest.h>

#include <array>

#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include "ramsey/codec.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/pauli.hpp"
#include "ramsey/quantum.hpp"
#include "support/dense_reference.hpp"

using namespace ramsey;
using ramsey::testing::l2_distance;
using ramsey::testing::overlap_magnitude;
using ramsey::testing::rk4_evolve;

namespace {

double inner_magnitude(const StateVector& a, const StateVector& b) {
    return overlap_magnitude(a.amplitudes, b.amplitudes);
}

DiagonalHamiltonian zero_hamiltonian(unsigned qubits) {
    DiagonalHamiltonian hp;
    hp.qubit_count = qubits;
    hp.values.assign(std::size_t{1} << qubits, 0.0);
    return hp;
}

}  // namespace

TEST_CASE("uniform preparation") {
    StateVector one = prepare_uniform(1);
    CHECK(one.amplitudes.size() == 2);
    CHECK(one.amplitudes[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(one.amplitudes[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(one.norm_squared() == doctest::Approx(1.0).epsilon(1e-15));

    StateVector ten = prepare_uniform(10);
    CHECK(ten.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(prepare_uniform(25, 24), InstanceTooLargeError);
    CHECK_THROWS_AS(prepare_uniform(0), std::invalid_argument);
}

TEST_CASE("the uniform state is annihilated by the driver") {
    for (unsigned qubits : {1u, 3u, 6u}) {
        StateVector state = prepare_uniform(qubits);
        StateVector driven = apply_driver(state);
        double residual = 0.0;
        for (const auto& amp : driven.amplitudes) residual += std::norm(amp);
        CHECK(residual < 1e-24);
    }
}

TEST_CASE("driver action on |0>") {
    StateVector state;
    state.qubit_count = 1;
    state.amplitudes = {1.0, 0.0};
    StateVector driven = apply_driver(state);
    CHECK(driven.amplitudes[0].real() == doctest::Approx(0.5));
    CHECK(driven.amplitudes[1].real() == doctest::Approx(-0.5));
}

TEST_CASE("Hadamard-basis states are driver eigenstates with integer eigenvalues") {
    // (|0> - |1>)/sqrt(2) per qubit contributes one unit of energy.
    for (unsigned pattern = 0; pattern < 4; ++pattern) {
        StateVector state;
        state.qubit_count = 2;
        state.amplitudes.resize(4);
        for (std::size_t x = 0; x < 4; ++x) {
            double sign = 1.0;
            for (unsigned q = 0; q < 2; ++q) {
                if ((pattern >> q) & 1u && (x >> q) & 1u) sign = -sign;
            }
            state.amplitudes[x] = sign * 0.5;
        }
        StateVector driven = apply_driver(state);
        const double eigenvalue = static_cast<double>(__builtin_popcount(pattern));
        for (std::size_t x = 0; x < 4; ++x) {
            CHECK(driven.amplitudes[x].real() ==
                  doctest::Approx(eigenvalue * state.amplitudes[x].real()).epsilon(1e-12));
        }
    }
}

TEST_CASE("zero problem Hamiltonian keeps the uniform ground state") {
    StateVector initial = prepare_uniform(4);
    StateVector final_state = evolve(initial, zero_hamiltonian(4), Schedule{5.0, 50});
    CHECK(std::abs(inner_magnitude(final_state, initial) - 1.0) < 1e-6);
    CHECK(std::abs(final_state.norm_squared() - 1.0) < 1e-9);
}

TEST_CASE("single qubit against the dense reference integrator") {
    DiagonalHamiltonian hp;
    hp.qubit_count = 1;
    hp.values = {0.0, 2.0};

    StateVector initial = prepare_uniform(1);
    StateVector splitting = evolve(initial, hp, Schedule{3.0, 6000});
    auto reference = rk4_evolve(initial, hp, 3.0, 30000);

    const double overlap = overlap_magnitude(splitting.amplitudes, reference);
    const double trace_distance = std::sqrt(std::max(0.0, 1.0 - overlap * overlap));
    CHECK(trace_distance <= 1e-6);
}

TEST_CASE("splitting error decays at second order") {
    CostParams params(4, 3, 3, 2);  // 6 qubits
    auto hp = DiagonalHamiltonian::from_cost(params);
    StateVector initial = prepare_uniform(6);

    auto reference = rk4_evolve(initial, hp, 2.0, 8192);
    const double coarse = l2_distance(evolve(initial, hp, Schedule{2.0, 32}).amplitudes, reference);
    const double fine = l2_distance(evolve(initial, hp, Schedule{2.0, 64}).amplitudes, reference);
    CHECK(coarse / fine >= 3.5);

    CostParams small(4, 4, 4, 3);  // 4 qubits
    auto hp_small = DiagonalHamiltonian::from_cost(small);
    StateVector start = prepare_uniform(4);
    auto ref_small = rk4_evolve(start, hp_small, 2.0, 8192);
    const double c2 = l2_distance(evolve(start, hp_small, Schedule{2.0, 32}).amplitudes, ref_small);
    const double f2 = l2_distance(evolve(start, hp_small, Schedule{2.0, 64}).amplitudes, ref_small);
    CHECK(c2 / f2 >= 3.5);
}

TEST_CASE("norm is conserved along a long evolution") {
    CostParams params(5, 3, 3, 2);  // 10 qubits
    auto hp = DiagonalHamiltonian::from_cost(params);
    std::ostringstream trace;
    EvolveOptions options;
    options.trace = &trace;
    StateVector final_state = evolve(prepare_uniform(10), hp, Schedule{100.0, 2000}, options);
    CHECK(std::abs(final_state.norm_squared() - 1.0) <= 1e-9);

    std::istringstream rows(trace.str());
    std::string line;
    std::getline(rows, line);  // header
    unsigned checked = 0;
    while (std::getline(rows, line)) {
        std::istringstream fields(line);
        double step, t, s, norm;
        fields >> step >> t >> s >> norm;
        CHECK(std::abs(norm - 1.0) <= 1e-9);
        ++checked;
    }
    CHECK(checked == 2000);
}

TEST_CASE("slow evolution reaches the ground subspace") {
    CostParams params(5, 3, 3, 2);
    auto hp = DiagonalHamiltonian::from_cost(params);
    StateVector slow = evolve(prepare_uniform(10), hp, Schedule{100.0, 2000});
    CHECK(ground_population(hp, slow) >= 0.9);
}

TEST_CASE("longer runtime cannot do worse than a quench") {
    CostParams params(5, 3, 3, 2);
    auto hp = DiagonalHamiltonian::from_cost(params);
    StateVector slow = evolve(prepare_uniform(10), hp, Schedule{100.0, 2000});
    StateVector fast = evolve(prepare_uniform(10), hp, Schedule{1.0, 20});
    CHECK(energy_expectation(hp, slow) <= energy_expectation(hp, fast));
    CHECK(ground_population(hp, slow) > ground_population(hp, fast));
}

TEST_CASE("cost-built and term-list-built diagonals are identical") {
    for (auto [n, m, nn, r] :
         {std::array<unsigned, 4>{4, 3, 3, 2}, std::array<unsigned, 4>{4, 4, 4, 3},
          std::array<unsigned, 4>{5, 3, 3, 2}, std::array<unsigned, 4>{5, 4, 4, 3}}) {
        CostParams params(n, m, nn, r);
        auto direct = DiagonalHamiltonian::from_cost(params);
        PauliPolynomial poly = compile_cost_hamiltonian(params);

        auto from_poly = DiagonalHamiltonian::from_pauli(poly);
        CHECK(direct.values == from_poly.values);

        // external load path: emit to text, parse, evaluate
        std::istringstream text(emit(poly));
        auto from_file = DiagonalHamiltonian::from_pauli(parse_pauli_text(text));
        CHECK(direct.values == from_file.values);
    }
}

TEST_CASE("sampling a deterministic state") {
    StateVector state;
    state.qubit_count = 3;
    state.amplitudes.assign(8, 0.0);
    state.amplitudes[5] = 1.0;
    for (std::uint64_t seed : {0ull, 1ull, 99ull}) CHECK(sample(state, seed) == 5);
}

TEST_CASE("sampling frequencies follow the squared amplitudes") {
    StateVector state = prepare_uniform(2);
    std::vector<unsigned> counts(4, 0);
    const unsigned draws = 10000;
    for (unsigned i = 0; i < draws; ++i) ++counts[sample(state, 1000 + i)];
    for (unsigned x = 0; x < 4; ++x) {
        const double freq = static_cast<double>(counts[x]) / draws;
        CHECK(std::abs(freq - 0.25) < 3.0 * std::sqrt(0.25 * 0.75 / draws));
    }
}

TEST_CASE("sampling is reproducible for a fixed seed") {
    CostParams params(4, 3, 3, 2);
    auto hp = DiagonalHamiltonian::from_cost(params);
    StateVector state = evolve(prepare_uniform(6), hp, Schedule{10.0, 100});
    CHECK(sample(state, 42) == sample(state, 42));
}

TEST_CASE("measured energy is the exact classical cost") {
    CostParams p5(5, 3, 3, 2);
    auto hp5 = DiagonalHamiltonian::from_cost(p5);
    HypergraphBits pentagon = encode(p5.map(), {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
    CHECK(measure_energy(hp5, to_basis_index(pentagon)) == 0.0);

    CostParams p4(4, 3, 3, 2);
    auto hp4 = DiagonalHamiltonian::from_cost(p4);
    CHECK(measure_energy(hp4, (1ull << 6) - 1) == 4.0);

    CHECK(measure_energy(zero_hamiltonian(3), 6) == 0.0);
    CHECK_THROWS_AS(measure_energy(hp4, 1ull << 6), std::out_of_range);
}

TEST_CASE("a too-coarse schedule triggers the aliasing diagnostic") {
    DiagonalHamiltonian hp = zero_hamiltonian(2);
    hp.values[3] = 100.0;
    std::ostringstream warnings;
    EvolveOptions options;
    options.warnings = &warnings;
    evolve(prepare_uniform(2), hp, Schedule{10.0, 10}, options);
    CHECK(warnings.str().find("per-step phase") != std::string::npos);

    warnings.str("");
    evolve(prepare_uniform(2), hp, Schedule{10.0, 1000}, options);
    CHECK(warnings.str().empty());
}

TEST_CASE("instance limits are enforced when building the diagonal") {
    CostParams params(7, 3, 3, 2);  // 21 qubits
    CHECK_THROWS_AS(DiagonalHamiltonian::from_cost(params, 10), InstanceTooLargeError);
}
