#pragma once

#include "json.hpp"

#include "hecke/formal_sum.hpp"
#include "hecke/lfunction.hpp"
#include "hecke/polynomial.hpp"
#include "hecke/reducer.hpp"

namespace hecke {

// JSON forms. Integer coefficients are string-encoded so arbitrary
// precision survives; term lists follow the canonical orders, so output
// is byte-stable for equal values.

nlohmann::ordered_json to_json(const HeckeMonomial& monomial);
nlohmann::ordered_json to_json(const HeckePolynomial& poly);
nlohmann::ordered_json to_json(const FormalSum& sum);
nlohmann::ordered_json to_json(const MultiPrimeReduction& reduction);
nlohmann::ordered_json to_json(const EulerFactorSeries& factor);

}  // namespace hecke
