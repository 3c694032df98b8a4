#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "hecke/formal_sum.hpp"
#include "hecke/index.hpp"
#include "hecke/polynomial.hpp"

namespace hecke {

/// A general coefficient split across numeric primes:
/// A(M) = eps^parity_power * prod_p factors[p], each factor a polynomial
/// in that prime's generators T_{p^k}.
struct MultiPrimeReduction {
    int n = 0;
    int parity_power = 0;
    std::map<long long, HeckePolynomial> factors;

    friend bool operator==(const MultiPrimeReduction&, const MultiPrimeReduction&) = default;
};

struct ReductionStats {
    std::size_t calls = 0;
    std::size_t recursive_edges = 0;
    std::size_t order_violations = 0;
    std::size_t cache_hits = 0;
};

/// Rewrites prime-power coefficient indices to exact polynomials in the
/// generators T_{p^k} by triangular elimination: for a target with last
/// nonzero slot s >= 2 it expands T_{p^{K0}} * A(shifted target) with
/// K0 = sum of the target exponents, where the target reappears with
/// coefficient 1 at the summation corner and every other term is strictly
/// smaller in reduction_order_less. Each recursive edge is checked against
/// that order and counted in stats(). Results are memoized per instance;
/// an instance must stay confined to one thread of control.
class Reducer {
public:
    explicit Reducer(int n);

    int rank() const { return n_; }

    HeckePolynomial reduce(const PrimeIndex& index);

    const ReductionStats& stats() const { return stats_; }

private:
    int n_;
    std::map<PrimeIndex, HeckePolynomial> memo_;
    ReductionStats stats_;

    const HeckePolynomial& reduce_inner(const PrimeIndex& index, const PrimeIndex* parent);
    HeckePolynomial eliminate(const PrimeIndex& index);
};

/// One-shot reduction with a private cache; pure and reentrant.
HeckePolynomial reduce(const PrimeIndex& index);

/// Polynomial for the coefficient with a single p in the given slot, as a
/// signed sum over the compositions of the slot number:
/// sum over (i_1, ..., i_r) with sum i_j = slot of prod_j (-1)^{i_j + 1} T_{p^{i_j}}.
/// Requires 1 <= slot <= n-1.
HeckePolynomial slot_polynomial_compositions(int n, int slot);

/// Same value through the convolution recurrence
/// A_slot = sum_{m=1..slot} (-1)^{m+1} T_{p^m} * A_{slot-m}, A_0 = 1.
/// Requires 1 <= slot <= n-1.
HeckePolynomial slot_polynomial_recurrence(int n, int slot);

/// Closed form T_{p^j}^2 - T_{p^{j-1}} T_{p^{j+1}} for the coefficient with
/// p^j in slot 2 (T_{p^0} = 1). Requires n >= 3 and j >= 1.
HeckePolynomial second_slot_closed_form(int n, int j);

/// Splits every entry of M over numeric primes by trial division and
/// reduces the per-prime valuation indices; parity_power records a
/// negative last entry. Entries must be >= 1.
MultiPrimeReduction factorize(const GeneralIndex& index);

/// As above but reusing the caller's cache across calls.
MultiPrimeReduction factorize(const GeneralIndex& index, Reducer& reducer);

}  // namespace hecke
