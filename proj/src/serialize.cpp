#include "hecke/serialize.hpp"

namespace hecke {

using nlohmann::ordered_json;

ordered_json to_json(const HeckeMonomial& monomial) {
    ordered_json out = ordered_json::array();
    for (const auto& [level, mult] : monomial.factors())
        out.push_back(ordered_json::array({level, mult}));
    return out;
}

ordered_json to_json(const HeckePolynomial& poly) {
    ordered_json terms = ordered_json::array();
    for (const auto& [monomial, c] : poly.terms()) {
        ordered_json term;
        term["coeff"] = c.str();
        term["monomial"] = to_json(monomial);
        terms.push_back(std::move(term));
    }
    ordered_json out;
    out["n"] = poly.rank();
    out["parity"] = poly.parity_power();
    out["terms"] = std::move(terms);
    return out;
}

ordered_json to_json(const FormalSum& sum) {
    ordered_json terms = ordered_json::array();
    for (const auto& [idx, c] : sum.terms()) {
        ordered_json term;
        term["coeff"] = c.str();
        term["index"] = idx.exps();
        terms.push_back(std::move(term));
    }
    ordered_json out;
    out["n"] = sum.rank();
    out["terms"] = std::move(terms);
    return out;
}

ordered_json to_json(const MultiPrimeReduction& reduction) {
    ordered_json factors = ordered_json::array();
    for (const auto& [p, poly] : reduction.factors) {
        ordered_json factor;
        factor["p"] = p;
        factor["poly"] = to_json(poly);
        factors.push_back(std::move(factor));
    }
    ordered_json out;
    out["n"] = reduction.n;
    out["parity"] = reduction.parity_power;
    out["factors"] = std::move(factors);
    return out;
}

ordered_json to_json(const EulerFactorSeries& factor) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& poly : factor.coeffs)
        coeffs.push_back(to_json(poly));
    ordered_json out;
    out["n"] = factor.n;
    out["factor"] = std::move(coeffs);
    return out;
}

}  // namespace hecke
