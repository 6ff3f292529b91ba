#include "ramsey/driver.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ramsey/cost.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

double repetitions_raw(const RepetitionPolicy& policy) {
    if (!(policy.epsilon > 0.0 && policy.epsilon < 1.0)) {
        throw std::invalid_argument("epsilon must lie in (0, 1)");
    }
    if (!(policy.delta > 0.0 && policy.delta < 1.0)) {
        throw std::invalid_argument("delta must lie in (0, 1)");
    }
    if (policy.k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    // The nudge keeps ratios that are mathematically integral (such as
    // ln 0.1 / ln 0.1) from ceiling up on the last ulp.
    return std::ceil(std::log1p(-policy.delta) / std::log(policy.epsilon) - 1e-12);
}

}  // namespace

unsigned repetitions(const RepetitionPolicy& policy) {
    const double raw = repetitions_raw(policy);
    if (!(raw >= 1.0)) return 1;
    if (raw >= static_cast<double>(policy.k_max)) return policy.k_max;
    return static_cast<unsigned>(raw);
}

bool repetitions_clamped(const RepetitionPolicy& policy) {
    return repetitions_raw(policy) > static_cast<double>(policy.k_max);
}

std::uint64_t derive_seed(std::uint64_t master, unsigned vertex_count, unsigned run) {
    // splitmix64 over the packed inputs
    std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(vertex_count) * 0x10001ull + run + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

unsigned default_low(unsigned m, unsigned n, unsigned r) {
    return std::max(std::max(m, n), r);
}

namespace {

NRecord zero_qubit_record(unsigned vertices, const CostParams& params) {
    // No r-subsets exist, so the empty coloring has cost 0 by definition.
    NRecord rec;
    rec.vertex_count = vertices;
    rec.qubit_count = 0;
    rec.min_is_zero = true;
    rec.best_energy = 0.0;
    rec.runs_used = 0;
    rec.witness = HypergraphBits(params.map());
    return rec;
}

}  // namespace

RamseyResult ramsey_aqe(unsigned m, unsigned n, unsigned r, unsigned low, const AqeConfig& config) {
    if (low < 1) throw std::invalid_argument("lower bound must be >= 1");

    RamseyResult result;
    result.backend = Backend::aqe;

    const unsigned runs = repetitions(config.policy);
    const bool clamped = repetitions_clamped(config.policy);

    for (unsigned vertices = low;; ++vertices) {
        CostParams params(vertices, m, n, r);
        const std::uint64_t qubits = params.map().length();

        if (qubits == 0) {
            result.per_n.push_back(zero_qubit_record(vertices, params));
            continue;
        }
        if (qubits > config.max_qubits) {
            throw InstanceTooLargeError(qubits, config.max_qubits,
                                        "N = " + std::to_string(vertices) + " needs " +
                                            std::to_string(qubits) + " qubits, limit is " +
                                            std::to_string(config.max_qubits));
        }

        const auto hp = DiagonalHamiltonian::from_cost(params, config.max_qubits);
        const auto initial = prepare_uniform(static_cast<unsigned>(qubits), config.max_qubits);

        EvolveOptions evolve_options;
        std::ofstream trace_file;
        if (!config.trace_prefix.empty()) {
            const std::string path = config.trace_prefix + "N" + std::to_string(vertices) + ".txt";
            trace_file.open(path);
            if (!trace_file) throw std::runtime_error("cannot open trace file " + path);
            evolve_options.trace = &trace_file;
        }
        const StateVector final_state = evolve(initial, hp, config.schedule, evolve_options);

        NRecord rec;
        rec.vertex_count = vertices;
        rec.qubit_count = qubits;

        for (unsigned run = 1; run <= runs; ++run) {
            const std::uint64_t index = sample(final_state, derive_seed(config.seed, vertices, run));
            const double energy = measure_energy(hp, index);
            rec.runs_used = run;
            if (run == 1 || energy < rec.best_energy) rec.best_energy = energy;

            if (energy == 0.0) {
                HypergraphBits witness = from_basis_index(params.map(), index);
                if (cost(params, witness) != 0) {
                    throw std::logic_error("sampled zero-energy state failed classical re-verification");
                }
                rec.min_is_zero = true;
                rec.witness = std::move(witness);
                break;
            }
        }

        if (rec.min_is_zero) {
            result.per_n.push_back(std::move(rec));
            continue;
        }

        rec.low_confidence = clamped;
        result.low_confidence = result.low_confidence || clamped;
        result.per_n.push_back(std::move(rec));
        result.ramsey_number = vertices;
        return result;
    }
}

RamseyResult ramsey_with_oracle(unsigned m, unsigned n, unsigned r, unsigned low,
                                unsigned max_bits) {
    if (low < 1) throw std::invalid_argument("lower bound must be >= 1");

    RamseyResult result;
    result.backend = Backend::oracle;

    for (unsigned vertices = low;; ++vertices) {
        CostParams params(vertices, m, n, r);
        MinimizeResult min = minimize(params, max_bits);

        NRecord rec;
        rec.vertex_count = vertices;
        rec.qubit_count = params.map().length();
        rec.best_energy = static_cast<double>(min.min_cost);
        rec.runs_used = 1;
        rec.min_is_zero = min.min_cost == 0;
        if (rec.min_is_zero) rec.witness = std::move(min.witness);
        result.per_n.push_back(std::move(rec));

        if (min.min_cost > 0) {
            result.ramsey_number = vertices;
            return result;
        }
    }
}

void write_report(const RamseyResult& result, std::ostream& out) {
    for (const NRecord& rec : result.per_n) {
        const char* decision = rec.min_is_zero ? "min=0" : (rec.low_confidence ? "min>0?" : "min>0");
        out << rec.vertex_count << ' ' << rec.qubit_count << ' ' << decision << ' ';
        if (rec.best_energy == std::floor(rec.best_energy)) {
            out << static_cast<long long>(rec.best_energy);
        } else {
            out << rec.best_energy;
        }
        out << ' ' << rec.runs_used << ' '
            << (rec.witness_file.empty() ? "-" : rec.witness_file.c_str()) << '\n';
    }
}

}  // namespace ramsey
