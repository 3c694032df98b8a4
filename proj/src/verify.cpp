#include "hecke/verify.hpp"

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <utility>

#include "hecke/identities.hpp"
#include "hecke/lfunction.hpp"
#include "hecke/reducer.hpp"
#include "hecke/satake.hpp"

namespace hecke {

namespace {

using Complex = std::complex<double>;

std::vector<PrimeIndex> indices_up_to_weight(int n, int max_weight) {
    std::vector<PrimeIndex> out;
    std::vector<int> exps(static_cast<size_t>(n - 1), 0);
    auto recurse = [&](auto&& self, size_t slot, int budget) -> void {
        if (slot == exps.size()) {
            out.emplace_back(n, exps);
            return;
        }
        for (int e = 0; e <= budget; ++e) {
            exps[slot] = e;
            self(self, slot + 1, budget - e);
        }
        exps[slot] = 0;
    };
    recurse(recurse, 0, max_weight);
    return out;
}

void record(VerifyCheck& check, double err) {
    ++check.cases;
    check.max_rel_err = std::max(check.max_rel_err, err);
}

// Coefficients of prod_i (1 - alpha_i X), the direct numeric route to the
// local factor.
std::vector<Complex> linear_factor_coefficients(const SatakeModel& model) {
    std::vector<Complex> coeffs{Complex(1.0, 0.0)};
    for (const auto& a : model.alpha) {
        coeffs.push_back(Complex(0.0, 0.0));
        for (size_t j = coeffs.size() - 1; j >= 1; --j)
            coeffs[j] -= a * coeffs[j - 1];
    }
    return coeffs;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
    if (options.n < 2)
        throw std::invalid_argument("rank must be at least 2");
    if (options.max_weight < 0)
        throw std::invalid_argument("weight bound must be nonnegative");
    if (options.trials < 1)
        throw std::invalid_argument("at least one trial is required");
    if (!(options.tol > 0.0))
        throw std::invalid_argument("tolerance must be positive");

    const int n = options.n;
    const std::vector<PrimeIndex> indices = indices_up_to_weight(n, options.max_weight);

    // Symbolic work once, numeric sweeps per model.
    Reducer reducer(n);
    std::vector<HeckePolynomial> reduced;
    reduced.reserve(indices.size());
    for (const auto& idx : indices)
        reduced.push_back(reducer.reduce(idx));

    struct ProductCase {
        int k0;
        size_t index_pos;
        FormalSum expansion;
    };
    std::vector<ProductCase> products;
    for (int k0 = 0; k0 <= options.max_weight; ++k0)
        for (size_t i = 0; i < indices.size(); ++i)
            products.push_back({k0, i, hecke_product(k0, indices[i])});

    std::vector<StepIdentity> steps;
    if (n >= 3)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= n - 1; ++k)
                steps.push_back(step_identity(n, j, k));

    const EulerFactorSeries factor = euler_factor(n);

    VerifyCheck reduce_check{"reduce_matches_schur_oracle", 0, 0.0, true};
    VerifyCheck product_check{"hecke_multiplication_identity", 0, 0.0, true};
    VerifyCheck step_check{"step_identity", 0, 0.0, true};
    VerifyCheck euler_check{"euler_factor_coefficients", 0, 0.0, true};

    for (int trial = 0; trial < options.trials; ++trial) {
        const SatakeModel model = random_model(n, options.seed + static_cast<std::uint64_t>(trial));

        std::vector<Complex> index_values;
        index_values.reserve(indices.size());
        for (const auto& idx : indices)
            index_values.push_back(eval_index(model, idx));

        for (size_t i = 0; i < indices.size(); ++i)
            record(reduce_check, relative_error(eval_poly(model, reduced[i]), index_values[i]));

        for (const auto& product : products) {
            const Complex row = eval_index(model, PrimeIndex::row(n, product.k0));
            const Complex lhs = row * index_values[product.index_pos];
            record(product_check, relative_error(eval_sum(model, product.expansion), lhs));
        }

        for (const auto& step : steps) {
            const Complex lhs =
                eval_index(model, step.row_factor) * eval_index(model, step.slot_factor);
            record(step_check, relative_error(eval_sum(model, step.product), lhs));
        }

        const std::vector<Complex> direct = linear_factor_coefficients(model);
        for (size_t j = 0; j < factor.coeffs.size(); ++j)
            record(euler_check,
                   relative_error(eval_poly(model, factor.coeffs[j]), direct[j]));
    }

    VerifyReport report;
    report.options = options;
    report.checks = {reduce_check, product_check, step_check, euler_check};
    for (auto& check : report.checks) {
        check.pass = check.max_rel_err <= options.tol;
        report.max_rel_err = std::max(report.max_rel_err, check.max_rel_err);
        report.pass = report.pass && check.pass;
    }
    return report;
}

nlohmann::ordered_json to_json(const VerifyReport& report) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& check : report.checks) {
        nlohmann::ordered_json entry;
        entry["name"] = check.name;
        entry["cases"] = check.cases;
        entry["max_rel_err"] = check.max_rel_err;
        entry["pass"] = check.pass;
        checks.push_back(std::move(entry));
    }
    nlohmann::ordered_json out;
    out["n"] = report.options.n;
    out["max_weight"] = report.options.max_weight;
    out["trials"] = report.options.trials;
    out["seed"] = report.options.seed;
    out["tol"] = report.options.tol;
    out["checks"] = std::move(checks);
    out["max_rel_err"] = report.max_rel_err;
    out["pass"] = report.pass;
    return out;
}

}  // namespace hecke
