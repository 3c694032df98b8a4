#pragma once

#include <map>
#include <vector>

#include "hecke/polynomial.hpp"
#include "hecke/reducer.hpp"

namespace hecke {

/// Local factor of the standard L-function as a polynomial series in
/// X = p^{-s}: entry j is the coefficient of X^j, with coeffs[0] = 1,
/// coeffs[j] = (-1)^j * (slot-j polynomial) for 1 <= j <= n-1, and
/// coeffs[n] = (-1)^n for the trivial central character.
struct EulerFactorSeries {
    int n = 0;
    std::vector<HeckePolynomial> coeffs;
};

EulerFactorSeries euler_factor(int n);

/// Power-series inverse of the factor truncated at X^upto, by the
/// recurrence b_k = -sum_{j=1..min(k,n)} coeffs[j] * b_{k-j} with b_0 = 1.
/// Requires a unit constant term.
std::vector<HeckePolynomial> invert_factor(const EulerFactorSeries& factor, int upto);

/// Reductions of the series coefficients A(m, 1, ..., 1) for 1 <= m <= m_max:
/// each is the product over primes of the single generator T_{p^{v_p(m)}}.
std::map<long long, MultiPrimeReduction> dirichlet_coefficients(int n, long long m_max);

}  // namespace hecke
