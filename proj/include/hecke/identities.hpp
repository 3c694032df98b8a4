#pragma once

#include <utility>
#include <vector>

#include "hecke/bigint.hpp"
#include "hecke/formal_sum.hpp"
#include "hecke/index.hpp"

namespace hecke {

/// Tuple (c_1, ..., c_n) with prod c_i = m and c_i | m_i for i <= n-1.
/// The last component is unconstrained beyond making the product exact.
struct DivisorTuple {
    std::vector<long long> c;

    friend bool operator==(const DivisorTuple&, const DivisorTuple&) = default;
};

/// Exhaustive, duplicate-free enumeration of the divisor tuples of m
/// against the entries of the index, ascending lexicographically in
/// (c_1, ..., c_{n-1}). Never empty: (1, ..., 1, m) always qualifies.
std::vector<DivisorTuple> divisor_tuples(long long m, const GeneralIndex& index);

/// Expansion of T_{p^k0} * A(p^{K_1}, ..., p^{K_{n-1}}) as a sum of
/// prime-power coefficients: over all exponent tuples k_i <= K_i with
/// sum k_i <= k0 the term has slot 1 exponent K_1 + (k0 - sum k) - k_1
/// and slot i exponent K_i + k_{i-1} - k_i. Coefficients of coinciding
/// indices accumulate.
FormalSum hecke_product(int k0, const PrimeIndex& index);

/// The same product computed from the nested-sum form: for parameters
/// (K_1, ..., K_r) with k0 >= K_1 + ... + K_r, sum over the full box
/// 0 <= k_i <= K_i of the index with slot 1 exponent
/// k0 + K_1 - 2k_1 - k_2 - ... - k_r, slot i exponent K_i + k_{i-1} - k_i
/// for 2 <= i <= r, and slot r+1 exponent k_r. When r = n-1 the trailing
/// k_r slot falls outside the index and is dropped, matching the divisor
/// form. Requires 1 <= r <= n-1; throws on a violated precondition.
FormalSum box_expansion(int n, int k0, const std::vector<int>& ks);

/// Index whose slot exponents multiply fixed entries coprime to the
/// symbolic prime: slot i holds p^{exps[i-1]} * base.entry(i).
struct ScaledIndex {
    std::vector<int> exps;
    GeneralIndex base;

    std::string str() const;

    friend bool operator==(const ScaledIndex&, const ScaledIndex&) = default;
};

/// box_expansion with a fixed coprime base riding along: every summand
/// keeps base.entry(i) in slot i while the prime-power pattern matches
/// box_expansion(base.rank(), k0, ks). The caller must declare the
/// symbolic prime coprime to all base entries; throws otherwise.
std::vector<std::pair<BigInt, ScaledIndex>> scaled_box_expansion(
    int k0, const std::vector<int>& ks, const GeneralIndex& base,
    bool prime_coprime_to_base);

/// Index obtained from (p^j, 1, ..., 1) by multiplying the k-th coordinate
/// by p; k = 0 and k = n mean no extra factor, and k = 1 merges into slot 1.
PrimeIndex bumped_index(int n, int j, int k);

/// The single-step multiplication identity
///   A(row j) * A(slot-k unit) = A(bumped(j,k)) + A(bumped(j-1,k+1)).
struct StepIdentity {
    PrimeIndex row_factor;
    PrimeIndex slot_factor;
    FormalSum product;
};

/// Requires n >= 3, j >= 1 and 1 <= k <= n-1.
StepIdentity step_identity(int n, int j, int k);

}  // namespace hecke
