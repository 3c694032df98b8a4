#include "hecke/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace hecke {

HeckeMonomial HeckeMonomial::generator(int level) {
    if (level < 0)
        throw std::invalid_argument("generator level must be nonnegative");
    HeckeMonomial m;
    if (level > 0)
        m.factors_[level] = 1;
    return m;
}

int HeckeMonomial::total_degree() const {
    int d = 0;
    for (const auto& [level, mult] : factors_)
        d += mult;
    return d;
}

HeckeMonomial HeckeMonomial::times(const HeckeMonomial& other) const {
    HeckeMonomial out(*this);
    for (const auto& [level, mult] : other.factors_)
        out.factors_[level] += mult;
    return out;
}

std::string HeckeMonomial::str() const {
    if (factors_.empty())
        return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [level, mult] : factors_) {
        if (!first)
            out << '*';
        out << "T(p";
        if (level > 1)
            out << '^' << level;
        out << ')';
        if (mult > 1)
            out << '^' << mult;
        first = false;
    }
    return out.str();
}

bool MonomialOrder::operator()(const HeckeMonomial& a, const HeckeMonomial& b) const {
    const int da = a.total_degree();
    const int db = b.total_degree();
    if (da != db)
        return da < db;
    return a.factors() < b.factors();
}

HeckePolynomial::HeckePolynomial(int n) : n_(n) {
    if (n_ < 2)
        throw std::invalid_argument("polynomial rank must be at least 2");
}

HeckePolynomial HeckePolynomial::constant(int n, BigInt c) {
    HeckePolynomial p(n);
    p.add_term(HeckeMonomial(), c);
    return p;
}

HeckePolynomial HeckePolynomial::generator(int n, int level) {
    HeckePolynomial p(n);
    p.add_term(HeckeMonomial::generator(level), 1);
    return p;
}

HeckePolynomial HeckePolynomial::parity_symbol(int n) {
    HeckePolynomial p = constant(n, 1);
    p.parity_power_ = 1;
    return p;
}

int HeckePolynomial::total_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

BigInt HeckePolynomial::coeff(const HeckeMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void HeckePolynomial::add_term(const HeckeMonomial& m, const BigInt& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
    if (terms_.empty())
        parity_power_ = 0;
}

std::string HeckePolynomial::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    if (parity_power_)
        out << "eps*(";
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0)
                out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (m.is_constant())
            out << mag;
        else {
            if (mag != 1)
                out << mag << '*';
            out << m.str();
        }
        first = false;
    }
    if (parity_power_)
        out << ')';
    return out.str();
}

HeckePolynomial poly_add(const HeckePolynomial& a, const HeckePolynomial& b) {
    if (a.n_ != b.n_)
        throw std::invalid_argument("rank mismatch");
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.parity_power_ != b.parity_power_)
        throw std::invalid_argument("parity mismatch: mixed-parity sums are not representable");
    HeckePolynomial out(a);
    for (const auto& [m, c] : b.terms_)
        out.add_term(m, c);
    return out;
}

HeckePolynomial poly_sub(const HeckePolynomial& a, const HeckePolynomial& b) {
    return poly_add(a, poly_negate(b));
}

HeckePolynomial poly_mul(const HeckePolynomial& a, const HeckePolynomial& b) {
    if (a.n_ != b.n_)
        throw std::invalid_argument("rank mismatch");
    HeckePolynomial out(a.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(ma.times(mb), ca * cb);
    if (!out.terms_.empty())
        out.parity_power_ = (a.parity_power_ + b.parity_power_) % 2;
    return out;
}

HeckePolynomial poly_scale(const BigInt& c, const HeckePolynomial& p) {
    HeckePolynomial out(p.n_);
    if (c == 0)
        return out;
    out.parity_power_ = p.parity_power_;
    for (const auto& [m, pc] : p.terms_)
        out.add_term(m, c * pc);
    return out;
}

HeckePolynomial poly_negate(const HeckePolynomial& p) {
    return poly_scale(BigInt(-1), p);
}

}  // namespace hecke
