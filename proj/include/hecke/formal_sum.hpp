#pragma once

#include <map>
#include <string>

#include "hecke/bigint.hpp"
#include "hecke/index.hpp"

namespace hecke {

/// Integer-linear combination of PrimeIndex terms. Canonical by
/// construction: zero coefficients are never stored and every index
/// shares the sum's rank.
class FormalSum {
public:
    explicit FormalSum(int n);

    int rank() const { return n_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<PrimeIndex, BigInt>& terms() const { return terms_; }

    /// Coefficient of idx, zero if absent.
    BigInt coeff(const PrimeIndex& idx) const;

    /// Accumulates c onto the coefficient of idx, dropping it on cancellation.
    void add_term(const PrimeIndex& idx, const BigInt& c);

    FormalSum& operator+=(const FormalSum& other);

    std::string str() const;

    friend bool operator==(const FormalSum&, const FormalSum&) = default;

private:
    int n_;
    std::map<PrimeIndex, BigInt> terms_;
};

FormalSum operator+(FormalSum a, const FormalSum& b);

}  // namespace hecke
