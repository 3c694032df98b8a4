#pragma once

#include <compare>
#include <string>
#include <vector>

namespace hecke {

/// Exponent vector (K_1, ..., K_{n-1}) indexing a prime-power Fourier
/// coefficient A(p^{K_1}, ..., p^{K_{n-1}}). The prime itself stays
/// symbolic; the all-zero vector is the normalized coefficient A(1,...,1)=1.
class PrimeIndex {
public:
    PrimeIndex(int n, std::vector<int> exps);

    static PrimeIndex zero(int n);
    /// (k, 0, ..., 0) — the index whose coefficient is the eigenvalue of T_{p^k}.
    static PrimeIndex row(int n, int k);
    /// Single 1 in the given slot (1-based), zeros elsewhere.
    static PrimeIndex unit_slot(int n, int slot);

    int rank() const { return n_; }
    const std::vector<int>& exps() const { return exps_; }
    int exp(int slot) const { return exps_[static_cast<size_t>(slot) - 1]; }

    bool is_zero() const;
    int weight() const;
    /// 1-based position of the last nonzero slot, 0 for the zero index.
    int last_nonzero_slot() const;

    PrimeIndex reversed() const;

    std::string str() const;

    friend auto operator<=>(const PrimeIndex&, const PrimeIndex&) = default;

private:
    int n_;
    std::vector<int> exps_;
};

/// Strict partial well-order driving the reducer's recursion: compare the
/// last nonzero slot position, then exponents from that slot down to slot 2.
/// Slot 1 is never compared, so indices differing only in slot 1 are
/// equivalent (neither is less).
bool reduction_order_less(const PrimeIndex& a, const PrimeIndex& b);

/// (m_1, ..., m_{n-1}) with positive integer entries; the sign of the last
/// entry is tracked separately as +1 or -1.
class GeneralIndex {
public:
    GeneralIndex(int n, std::vector<long long> entries, int last_sign = +1);

    /// Builds from raw entries where the last one may be negative.
    static GeneralIndex from_signed(int n, std::vector<long long> entries);

    int rank() const { return n_; }
    const std::vector<long long>& entries() const { return entries_; }
    long long entry(int slot) const { return entries_[static_cast<size_t>(slot) - 1]; }
    int last_sign() const { return last_sign_; }

    /// Entrywise product; signs multiply on the last slot.
    GeneralIndex times(const GeneralIndex& other) const;

    std::string str() const;

    friend bool operator==(const GeneralIndex&, const GeneralIndex&) = default;

private:
    int n_;
    std::vector<long long> entries_;
    int last_sign_;
};

}  // namespace hecke
