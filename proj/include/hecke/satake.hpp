#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "hecke/formal_sum.hpp"
#include "hecke/index.hpp"
#include "hecke/polynomial.hpp"
#include "hecke/reducer.hpp"

namespace hecke {

inline constexpr double kUnitDetTolerance = 1e-12;
inline constexpr double kMinSeparation = 1e-6;

/// Numeric stand-in for a Hecke eigensystem at one prime: n complex
/// parameters with unit product. Immutable once built.
struct SatakeModel {
    int n = 0;
    std::uint64_t seed = 0;
    std::vector<std::complex<double>> alpha;
};

/// Deterministic model from (n, seed): n-1 parameters drawn uniformly on
/// the annulus 0.5 <= |a| <= 2, the last set to the reciprocal of their
/// product; redraws until all pairwise separations reach kMinSeparation.
/// Throws after a bounded number of redraw attempts.
SatakeModel random_model(int n, std::uint64_t seed);

/// Ground-truth value of the coefficient at the given exponent vector:
/// the Schur value s_lambda(alpha) with lambda_i = K_i + ... + K_{n-1},
/// computed as the bialternant determinant ratio
/// det(alpha_i^{lambda_j + n - j}) / det(alpha_i^{n - j}).
/// Throws if the model's separation invariant is violated.
std::complex<double> eval_index(const SatakeModel& model, const PrimeIndex& index);

/// Linear extension of eval_index to integer combinations.
std::complex<double> eval_sum(const SatakeModel& model, const FormalSum& sum);

/// Substitutes T_{p^k} -> eval_index of the row index (k, 0, ..., 0) and
/// eps -> parity_value (which must be +1 or -1).
std::complex<double> eval_poly(const SatakeModel& model, const HeckePolynomial& poly,
                               int parity_value = +1);

/// parity_value^parity_power times the product of the per-prime factor
/// evaluations; every prime in the reduction needs a model.
std::complex<double> eval_general(const std::map<long long, SatakeModel>& models,
                                  const MultiPrimeReduction& reduction,
                                  int parity_value = +1);

/// |value - reference| / (1 + |reference|).
double relative_error(std::complex<double> value, std::complex<double> reference);

}  // namespace hecke
