#include "hecke/index.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hecke {

PrimeIndex::PrimeIndex(int n, std::vector<int> exps) : n_(n), exps_(std::move(exps)) {
    if (n_ < 2)
        throw std::invalid_argument("index rank must be at least 2");
    if (exps_.size() != static_cast<size_t>(n_ - 1))
        throw std::invalid_argument("index needs exactly n-1 exponents");
    for (int e : exps_)
        if (e < 0)
            throw std::invalid_argument("index exponents must be nonnegative");
}

PrimeIndex PrimeIndex::zero(int n) {
    return PrimeIndex(n, std::vector<int>(static_cast<size_t>(n - 1), 0));
}

PrimeIndex PrimeIndex::row(int n, int k) {
    std::vector<int> exps(static_cast<size_t>(n - 1), 0);
    if (!exps.empty())
        exps[0] = k;
    return PrimeIndex(n, std::move(exps));
}

PrimeIndex PrimeIndex::unit_slot(int n, int slot) {
    if (slot < 1 || slot > n - 1)
        throw std::invalid_argument("slot out of range");
    std::vector<int> exps(static_cast<size_t>(n - 1), 0);
    exps[static_cast<size_t>(slot) - 1] = 1;
    return PrimeIndex(n, std::move(exps));
}

bool PrimeIndex::is_zero() const {
    for (int e : exps_)
        if (e != 0)
            return false;
    return true;
}

int PrimeIndex::weight() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0);
}

int PrimeIndex::last_nonzero_slot() const {
    for (int i = n_ - 1; i >= 1; --i)
        if (exps_[static_cast<size_t>(i) - 1] != 0)
            return i;
    return 0;
}

PrimeIndex PrimeIndex::reversed() const {
    std::vector<int> exps(exps_.rbegin(), exps_.rend());
    return PrimeIndex(n_, std::move(exps));
}

std::string PrimeIndex::str() const {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < exps_.size(); ++i) {
        if (i)
            out << ',';
        out << exps_[i];
    }
    out << ')';
    return out.str();
}

bool reduction_order_less(const PrimeIndex& a, const PrimeIndex& b) {
    const int sa = a.last_nonzero_slot();
    const int sb = b.last_nonzero_slot();
    if (sa != sb)
        return sa < sb;
    for (int slot = sa; slot >= 2; --slot) {
        if (a.exp(slot) != b.exp(slot))
            return a.exp(slot) < b.exp(slot);
    }
    return false;
}

GeneralIndex::GeneralIndex(int n, std::vector<long long> entries, int last_sign)
    : n_(n), entries_(std::move(entries)), last_sign_(last_sign) {
    if (n_ < 2)
        throw std::invalid_argument("index rank must be at least 2");
    if (entries_.size() != static_cast<size_t>(n_ - 1))
        throw std::invalid_argument("index needs exactly n-1 entries");
    for (long long m : entries_)
        if (m < 1)
            throw std::invalid_argument("index entries must be positive");
    if (last_sign_ != 1 && last_sign_ != -1)
        throw std::invalid_argument("last sign must be +1 or -1");
}

GeneralIndex GeneralIndex::from_signed(int n, std::vector<long long> entries) {
    int sign = +1;
    if (!entries.empty() && entries.back() < 0) {
        sign = -1;
        entries.back() = -entries.back();
    }
    return GeneralIndex(n, std::move(entries), sign);
}

GeneralIndex GeneralIndex::times(const GeneralIndex& other) const {
    if (other.n_ != n_)
        throw std::invalid_argument("rank mismatch");
    std::vector<long long> entries(entries_);
    for (size_t i = 0; i < entries.size(); ++i)
        entries[i] *= other.entries_[i];
    return GeneralIndex(n_, std::move(entries), last_sign_ * other.last_sign_);
}

std::string GeneralIndex::str() const {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            out << ',';
        if (i + 1 == entries_.size() && last_sign_ < 0)
            out << '-';
        out << entries_[i];
    }
    out << ')';
    return out.str();
}

}  // namespace hecke
