#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace hecke {

struct VerifyOptions {
    int n = 3;
    int max_weight = 3;
    int trials = 20;
    std::uint64_t seed = 1;
    double tol = 1e-8;
};

struct VerifyCheck {
    std::string name;
    std::size_t cases = 0;
    double max_rel_err = 0.0;
    bool pass = true;
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<VerifyCheck> checks;
    double max_rel_err = 0.0;
    bool pass = true;
};

/// Property suite pitting the symbolic engine against the numeric model:
/// reductions against direct index evaluation, the multiplication identity,
/// the single-step identity, and the local-factor coefficients against
/// elementary symmetric values. Deterministic for fixed options.
VerifyReport run_verify(const VerifyOptions& options);

nlohmann::ordered_json to_json(const VerifyReport& report);

}  // namespace hecke
