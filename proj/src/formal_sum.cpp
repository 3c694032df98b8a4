#include "hecke/formal_sum.hpp"

#include <sstream>
#include <stdexcept>

namespace hecke {

FormalSum::FormalSum(int n) : n_(n) {
    if (n_ < 2)
        throw std::invalid_argument("sum rank must be at least 2");
}

BigInt FormalSum::coeff(const PrimeIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void FormalSum::add_term(const PrimeIndex& idx, const BigInt& c) {
    if (idx.rank() != n_)
        throw std::invalid_argument("rank mismatch");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
    if (other.n_ != n_)
        throw std::invalid_argument("rank mismatch");
    for (const auto& [idx, c] : other.terms_)
        add_term(idx, c);
    return *this;
}

std::string FormalSum::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0)
                out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1)
            out << mag << '*';
        out << 'A' << idx.str();
        first = false;
    }
    return out.str();
}

FormalSum operator+(FormalSum a, const FormalSum& b) {
    a += b;
    return a;
}

}  // namespace hecke
