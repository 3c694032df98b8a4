// Command-line surface over the reduction engine. Every subcommand is a
// thin adapter: parse flags, call the library, emit schema-versioned JSON
// on standard output. Exit codes: 0 success, 1 verification failure,
// 2 usage or validation error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hecke/identities.hpp"
#include "hecke/lfunction.hpp"
#include "hecke/reducer.hpp"
#include "hecke/serialize.hpp"
#include "hecke/verify.hpp"

namespace {

constexpr const char* kSchema = "hecke-reduce/1";
constexpr const char* kOutputDirEnv = "HECKE_REDUCE_OUT_DIR";

struct EmitOptions {
    bool pretty = false;
    std::string output_path;
};

std::filesystem::path resolve_output_path(const std::string& path) {
    std::filesystem::path out(path);
    if (out.is_relative()) {
        if (const char* dir = std::getenv(kOutputDirEnv))
            out = std::filesystem::path(dir) / out;
    }
    return out;
}

void emit(const nlohmann::ordered_json& payload, const EmitOptions& options) {
    const std::string text = options.pretty ? payload.dump(2) : payload.dump();
    std::cout << text << '\n';
    if (!options.output_path.empty()) {
        const auto path = resolve_output_path(options.output_path);
        std::ofstream file(path);
        if (!file)
            throw std::runtime_error("cannot open output file: " + path.string());
        file << text << '\n';
    }
}

nlohmann::ordered_json with_schema(nlohmann::ordered_json payload) {
    nlohmann::ordered_json out;
    out["schema"] = kSchema;
    for (auto& [key, value] : payload.items())
        out[key] = std::move(value);
    return out;
}

std::vector<int> checked_exponents(int n, const std::vector<int>& raw, const char* what) {
    if (raw.size() != static_cast<size_t>(n - 1))
        throw CLI::ValidationError(std::string(what) + " needs exactly n-1 entries");
    for (int e : raw)
        if (e < 0)
            throw CLI::ValidationError(std::string(what) + " entries must be nonnegative");
    return raw;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact reduction of Maass-form Fourier coefficients to Hecke-generator "
                 "polynomials, with a numeric verification oracle"};
    app.require_subcommand(1);
    app.fallthrough();

    EmitOptions emit_options;
    app.add_flag("--pretty", emit_options.pretty, "indent JSON output");
    app.add_option("--output", emit_options.output_path,
                   "also write the JSON to this file (relative paths resolve against $" +
                       std::string(kOutputDirEnv) + ")");

    int n = 3;
    std::vector<int> index_exps;
    int k0 = 0;
    int slot = 1;
    std::vector<long long> entries;
    int upto = -1;
    bool invert = false;
    hecke::VerifyOptions verify_options;

    auto* reduce_cmd =
        app.add_subcommand("reduce", "reduce a prime-power coefficient index to a polynomial "
                                     "in the generators T_{p^k}");
    reduce_cmd->add_option("--n", n, "rank")->required()->check(CLI::Range(2, 64));
    reduce_cmd->add_option("--index", index_exps, "comma-separated exponents K_1,...,K_{n-1}")
        ->required()
        ->delimiter(',');

    auto* expand_cmd =
        app.add_subcommand("expand", "expand T_{p^k0} times a coefficient as a sum of "
                                     "coefficient indices");
    expand_cmd->add_option("--n", n, "rank")->required()->check(CLI::Range(2, 64));
    expand_cmd->add_option("--k0", k0, "multiplier exponent")->required()
        ->check(CLI::NonNegativeNumber);
    expand_cmd->add_option("--index", index_exps, "comma-separated exponents")
        ->required()
        ->delimiter(',');

    auto* compose_cmd =
        app.add_subcommand("compose", "polynomial for a single-p slot coefficient via "
                                      "signed compositions");
    compose_cmd->add_option("--n", n, "rank")->required()->check(CLI::Range(2, 64));
    compose_cmd->add_option("--slot", slot, "slot number, 1..n-1")->required();

    auto* factor_cmd =
        app.add_subcommand("factor", "split a general coefficient index across primes and "
                                     "reduce each prime part");
    factor_cmd->add_option("--n", n, "rank")->required()->check(CLI::Range(2, 64));
    factor_cmd->add_option("--m", entries, "comma-separated entries m_1,...,m_{n-1}; the last "
                                           "may be negative")
        ->required()
        ->delimiter(',');

    auto* euler_cmd = app.add_subcommand("euler", "local factor of the standard L-function");
    euler_cmd->add_option("--n", n, "rank")->required()->check(CLI::Range(2, 64));
    euler_cmd->add_option("--upto", upto, "truncation order for the inverse series");
    euler_cmd->add_flag("--invert", invert, "also print the inverse series coefficients");

    auto* verify_cmd =
        app.add_subcommand("verify", "run the numeric-oracle property suite");
    verify_cmd->add_option("--n", verify_options.n, "rank")->check(CLI::Range(2, 16));
    verify_cmd->add_option("--max-weight", verify_options.max_weight,
                           "bound on the exponent sum of tested indices");
    verify_cmd->add_option("--trials", verify_options.trials, "number of random models");
    verify_cmd->add_option("--seed", verify_options.seed, "base seed");
    verify_cmd->add_option("--tol", verify_options.tol, "relative tolerance");

    try {
        app.parse(argc, argv);

        if (reduce_cmd->parsed()) {
            const hecke::PrimeIndex idx(n, checked_exponents(n, index_exps, "--index"));
            emit(with_schema(hecke::to_json(hecke::reduce(idx))), emit_options);
        } else if (expand_cmd->parsed()) {
            const hecke::PrimeIndex idx(n, checked_exponents(n, index_exps, "--index"));
            emit(with_schema(hecke::to_json(hecke::hecke_product(k0, idx))), emit_options);
        } else if (compose_cmd->parsed()) {
            emit(with_schema(hecke::to_json(hecke::slot_polynomial_compositions(n, slot))),
                 emit_options);
        } else if (factor_cmd->parsed()) {
            if (entries.size() != static_cast<size_t>(n - 1))
                throw CLI::ValidationError("--m needs exactly n-1 entries");
            const auto idx = hecke::GeneralIndex::from_signed(n, entries);
            emit(with_schema(hecke::to_json(hecke::factorize(idx))), emit_options);
        } else if (euler_cmd->parsed()) {
            const auto factor = hecke::euler_factor(n);
            auto payload = hecke::to_json(factor);
            if (invert) {
                const int order = upto >= 0 ? upto : n;
                nlohmann::ordered_json inverse = nlohmann::ordered_json::array();
                for (const auto& poly : hecke::invert_factor(factor, order))
                    inverse.push_back(hecke::to_json(poly));
                payload["inverse"] = std::move(inverse);
            }
            emit(with_schema(std::move(payload)), emit_options);
        } else if (verify_cmd->parsed()) {
            const auto report = hecke::run_verify(verify_options);
            emit(with_schema(hecke::to_json(report)), emit_options);
            return report.pass ? 0 : 1;
        }
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
