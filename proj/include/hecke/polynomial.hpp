#pragma once

#include <compare>
#include <map>
#include <string>

#include "hecke/bigint.hpp"

namespace hecke {

/// Product of generators prod_k T_{p^k}^{mult}. Level 0 is the identity
/// operator and is never stored; the empty monomial is the constant 1.
class HeckeMonomial {
public:
    HeckeMonomial() = default;

    /// T_{p^level}; level 0 yields the constant monomial.
    static HeckeMonomial generator(int level);

    const std::map<int, int>& factors() const { return factors_; }
    bool is_constant() const { return factors_.empty(); }
    /// Number of generator factors counted with multiplicity.
    int total_degree() const;

    HeckeMonomial times(const HeckeMonomial& other) const;

    std::string str() const;

    friend auto operator<=>(const HeckeMonomial&, const HeckeMonomial&) = default;

private:
    std::map<int, int> factors_;  // level -> multiplicity >= 1
};

/// Canonical term order: total degree first, then lexicographic on the
/// ascending (level, multiplicity) pair lists. Deterministic, diff-stable.
struct MonomialOrder {
    bool operator()(const HeckeMonomial& a, const HeckeMonomial& b) const;
};

/// Exact integer polynomial in the generators T_{p^k}, tagged with a rank
/// context n and a formal parity factor eps with eps^2 = 1. A polynomial is
/// eps^parity_power times the stored term sum; the zero polynomial always
/// has parity 0. Values are immutable in normal use; all operations below
/// are pure.
class HeckePolynomial {
public:
    explicit HeckePolynomial(int n);

    static HeckePolynomial constant(int n, BigInt c);
    /// T_{p^level} as a polynomial; level 0 is absorbed into the constant 1.
    static HeckePolynomial generator(int n, int level);
    /// The bare parity symbol eps.
    static HeckePolynomial parity_symbol(int n);

    int rank() const { return n_; }
    int parity_power() const { return parity_power_; }
    const std::map<HeckeMonomial, BigInt, MonomialOrder>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;

    BigInt coeff(const HeckeMonomial& m) const;

    /// Accumulates c onto the coefficient of m, dropping zero results.
    void add_term(const HeckeMonomial& m, const BigInt& c);

    std::string str() const;

    friend bool operator==(const HeckePolynomial&, const HeckePolynomial&) = default;

private:
    int n_;
    int parity_power_ = 0;
    std::map<HeckeMonomial, BigInt, MonomialOrder> terms_;

    friend HeckePolynomial poly_add(const HeckePolynomial&, const HeckePolynomial&);
    friend HeckePolynomial poly_mul(const HeckePolynomial&, const HeckePolynomial&);
    friend HeckePolynomial poly_scale(const BigInt&, const HeckePolynomial&);
};

/// Exact sum. The ranks must match; if both operands are nonzero their
/// parity powers must agree (a mixed-parity sum is not representable).
HeckePolynomial poly_add(const HeckePolynomial& a, const HeckePolynomial& b);
HeckePolynomial poly_sub(const HeckePolynomial& a, const HeckePolynomial& b);

/// Exact distributive product; generator multiplicities add and the parity
/// powers add modulo 2.
HeckePolynomial poly_mul(const HeckePolynomial& a, const HeckePolynomial& b);

HeckePolynomial poly_scale(const BigInt& c, const HeckePolynomial& p);
HeckePolynomial poly_negate(const HeckePolynomial& p);

inline HeckePolynomial operator+(const HeckePolynomial& a, const HeckePolynomial& b) { return poly_add(a, b); }
inline HeckePolynomial operator-(const HeckePolynomial& a, const HeckePolynomial& b) { return poly_sub(a, b); }
inline HeckePolynomial operator*(const HeckePolynomial& a, const HeckePolynomial& b) { return poly_mul(a, b); }
inline HeckePolynomial operator*(const BigInt& c, const HeckePolynomial& p) { return poly_scale(c, p); }

}  // namespace hecke
