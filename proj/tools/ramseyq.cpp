// Command-line front end: encode/decode hypergraph colorings, evaluate
// the Ramsey cost, compile the diagonal Hamiltonian to a Pauli-Z term
// list, and run the N-incrementing Ramsey search on either backend.
//
// Exit codes: 0 success, 1 runtime refusal or internal error, 2 bad
// input, 3 completed but with a low-confidence decision.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ramsey/binomial.hpp"
#include "ramsey/codec.hpp"
#include "ramsey/cost.hpp"
#include "ramsey/driver.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/pauli.hpp"
#include "ramsey/quantum.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitLowConfidence = 3;

// The one Ramsey number for edge arity >= 3 with a known exact value.
// Deciding such an instance means simulating N equal to the value
// itself, so the required register size is known up front.
std::optional<unsigned> known_ramsey_value(unsigned m, unsigned n, unsigned r) {
    if (r == 3 && ((m == 4 && n == 4))) return 13;
    return std::nullopt;
}

int run_encode(const std::string& path) {
    ramsey::HypergraphBits hb = [&] {
        if (path == "-") return ramsey::parse_edge_list_text(std::cin);
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        return ramsey::parse_edge_list_text(in);
    }();
    std::cout << ramsey::to_bit_string(hb) << '\n';
    return 0;
}

int run_decode(unsigned n, unsigned r, const std::string& bits) {
    ramsey::EdgeIndexMap map(n, r);
    std::cout << ramsey::to_edge_list_text(ramsey::parse_bit_string(map, bits));
    return 0;
}

int run_cost(unsigned n, unsigned m_order, unsigned n_order, unsigned r,
             const std::string& bits) {
    ramsey::CostParams params(n, m_order, n_order, r);
    ramsey::HypergraphBits hb = ramsey::parse_bit_string(params.map(), bits);
    const auto cliques = ramsey::count_cliques(params, hb);
    const auto independents = ramsey::count_independent_sets(params, hb);
    std::cout << cliques << ' ' << independents << ' ' << cliques + independents << '\n';
    return 0;
}

int run_compile(unsigned n, unsigned m_order, unsigned n_order, unsigned r,
                const std::string& out_path) {
    ramsey::CostParams params(n, m_order, n_order, r);
    ramsey::PauliPolynomial poly = ramsey::compile_cost_hamiltonian(params);
    const std::string text = ramsey::emit(poly);
    if (out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        out << text;
    }
    std::cout << "terms=" << poly.terms.size() << " max_locality=" << poly.max_locality()
              << '\n';
    return 0;
}

struct RamseyArgs {
    unsigned m = 0, n = 0, r = 0;
    std::string backend = "oracle";
    unsigned low = 0;  // 0 = default max(m, n, r)
    double total_time = 100.0;
    unsigned steps = 2000;
    double epsilon = 0.5;
    double delta = 0.99;
    unsigned k_max = 64;
    std::uint64_t seed = 12345;
    unsigned limit = 0;  // 0 = backend default
    std::string trace_prefix;
    std::string witness_dir;
};

void write_witness_files(ramsey::RamseyResult& result, const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (ramsey::NRecord& rec : result.per_n) {
        if (!rec.witness) continue;
        const std::string path =
            (std::filesystem::path(dir) / ("witness_N" + std::to_string(rec.vertex_count) + ".txt"))
                .string();
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open " + path);
        out << ramsey::to_edge_list_text(*rec.witness);
        rec.witness_file = path;
    }
}

int run_ramsey(const RamseyArgs& args) {
    const bool use_aqe = args.backend == "aqe";
    const unsigned low = args.low ? args.low : ramsey::default_low(args.m, args.n, args.r);
    const unsigned limit =
        args.limit ? args.limit
                   : (use_aqe ? ramsey::kDefaultSimulableQubits : ramsey::kDefaultExhaustiveBits);

    if (auto known = known_ramsey_value(args.m, args.n, args.r)) {
        const std::uint64_t needed = ramsey::binomial(*known, args.r);
        if (needed > limit) {
            std::cerr << "R(" << args.m << "," << args.n << ";" << args.r << ") = " << *known
                      << " is the known value; deciding it means reaching N=" << *known
                      << ", which requires " << needed
                      << (use_aqe ? " qubits of state-vector simulation"
                                  : " bits of exhaustive search")
                      << " against a limit of " << limit << ". Refusing.\n";
            return kExitError;
        }
    }

    ramsey::RamseyResult result;
    if (use_aqe) {
        ramsey::AqeConfig config;
        config.schedule = ramsey::Schedule{args.total_time, args.steps};
        config.policy = ramsey::RepetitionPolicy{args.epsilon, args.delta, args.k_max};
        config.seed = args.seed;
        config.max_qubits = limit;
        config.trace_prefix = args.trace_prefix;
        result = ramsey::ramsey_aqe(args.m, args.n, args.r, low, config);
    } else {
        result = ramsey::ramsey_with_oracle(args.m, args.n, args.r, low, limit);
    }

    if (!args.witness_dir.empty()) write_witness_files(result, args.witness_dir);

    ramsey::write_report(result, std::cout);
    std::cout << "R(" << args.m << "," << args.n << ";" << args.r << ") = "
              << result.ramsey_number << '\n';

    if (result.low_confidence) {
        std::cerr << "warning: the repetition budget was below the requested confidence; "
                     "the decision is low-confidence\n";
        return kExitLowConfidence;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-color hypergraph Ramsey numbers via exhaustive search "
                 "or simulated adiabatic quantum evolution"};
    app.require_subcommand(1);

    std::string encode_path = "-";
    auto* encode_cmd = app.add_subcommand("encode", "edge-list text -> bit string");
    encode_cmd->add_option("file", encode_path, "edge-list file (\"-\" for stdin)");

    unsigned dec_n = 0, dec_r = 0;
    std::string dec_bits;
    auto* decode_cmd = app.add_subcommand("decode", "bit string -> edge-list text");
    decode_cmd->add_option("N", dec_n, "vertex count")->required();
    decode_cmd->add_option("r", dec_r, "edge arity")->required();
    decode_cmd->add_option("bits", dec_bits, "bit string, bit 1 first")->required();

    unsigned cost_n = 0, cost_m = 0, cost_nn = 0, cost_r = 0;
    std::string cost_bits;
    auto* cost_cmd = app.add_subcommand("cost", "print clique count, independent-set count, cost");
    cost_cmd->add_option("N", cost_n, "vertex count")->required();
    cost_cmd->add_option("m", cost_m, "clique order")->required();
    cost_cmd->add_option("n", cost_nn, "independent-set order")->required();
    cost_cmd->add_option("r", cost_r, "edge arity")->required();
    cost_cmd->add_option("bits", cost_bits, "bit string, bit 1 first")->required();

    unsigned comp_n = 0, comp_m = 0, comp_nn = 0, comp_r = 0;
    std::string comp_out;
    auto* compile_cmd = app.add_subcommand("compile", "write the Pauli-Z term list");
    compile_cmd->add_option("N", comp_n, "vertex count")->required();
    compile_cmd->add_option("m", comp_m, "clique order")->required();
    compile_cmd->add_option("n", comp_nn, "independent-set order")->required();
    compile_cmd->add_option("r", comp_r, "edge arity")->required();
    compile_cmd->add_option("out", comp_out, "output path (\"-\" for stdout)")->required();

    RamseyArgs ra;
    auto* ramsey_cmd = app.add_subcommand("ramsey", "compute R(m,n;r) by incrementing N");
    ramsey_cmd->add_option("m", ra.m, "clique order")->required();
    ramsey_cmd->add_option("n", ra.n, "independent-set order")->required();
    ramsey_cmd->add_option("r", ra.r, "edge arity")->required();
    ramsey_cmd->add_option("--backend", ra.backend, "oracle | aqe")
        ->check(CLI::IsMember({"oracle", "aqe"}))
        ->capture_default_str();
    ramsey_cmd->add_option("--low", ra.low, "strict lower bound to start from (default max(m,n,r))");
    ramsey_cmd->add_option("--T", ra.total_time, "evolution runtime")->capture_default_str();
    ramsey_cmd->add_option("--steps", ra.steps, "integration steps")->capture_default_str();
    ramsey_cmd->add_option("--epsilon", ra.epsilon, "assumed single-run failure probability")
        ->capture_default_str();
    ramsey_cmd->add_option("--delta", ra.delta, "target detection confidence")->capture_default_str();
    ramsey_cmd->add_option("--kmax", ra.k_max, "repetition cap")->capture_default_str();
    ramsey_cmd->add_option("--seed", ra.seed, "measurement seed")->capture_default_str();
    ramsey_cmd->add_option("--limit", ra.limit,
                           "instance-size limit (qubits for aqe, bits for oracle)");
    ramsey_cmd->add_option("--trace", ra.trace_prefix, "per-N evolution trace file prefix");
    ramsey_cmd->add_option("--witness-dir", ra.witness_dir, "directory for witness edge lists");

    CLI11_PARSE(app, argc, argv);

    try {
        if (encode_cmd->parsed()) return run_encode(encode_path);
        if (decode_cmd->parsed()) return run_decode(dec_n, dec_r, dec_bits);
        if (cost_cmd->parsed()) return run_cost(cost_n, cost_m, cost_nn, cost_r, cost_bits);
        if (compile_cmd->parsed()) return run_compile(comp_n, comp_m, comp_nn, comp_r, comp_out);
        if (ramsey_cmd->parsed()) return run_ramsey(ra);
    } catch (const ramsey::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const ramsey::InstanceTooLargeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return 0;
}
