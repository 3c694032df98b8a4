#include "hecke/reducer.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

#include "hecke/identities.hpp"

namespace hecke {

Reducer::Reducer(int n) : n_(n) {
    if (n_ < 2)
        throw std::invalid_argument("reducer rank must be at least 2");
}

HeckePolynomial Reducer::reduce(const PrimeIndex& index) {
    if (index.rank() != n_)
        throw std::invalid_argument("rank mismatch");
    ++stats_.calls;
    return reduce_inner(index, nullptr);
}

const HeckePolynomial& Reducer::reduce_inner(const PrimeIndex& index, const PrimeIndex* parent) {
    if (parent) {
        ++stats_.recursive_edges;
        if (!reduction_order_less(index, *parent))
            ++stats_.order_violations;
    }
    auto it = memo_.find(index);
    if (it != memo_.end()) {
        ++stats_.cache_hits;
        return it->second;
    }
    HeckePolynomial value = eliminate(index);
    return memo_.emplace(index, std::move(value)).first->second;
}

HeckePolynomial Reducer::eliminate(const PrimeIndex& index) {
    const int s = index.last_nonzero_slot();
    if (s == 0)
        return HeckePolynomial::constant(n_, 1);
    if (s == 1)
        return HeckePolynomial::generator(n_, index.exp(1));

    // Expand T_{p^{K0}} * A(shifted) with K0 the sum of the target
    // exponents and the shifted parameters (J_2, ..., J_s). The target
    // reappears exactly once, at the corner k_i = K_i of the box, and
    // every other summand precedes it in the reduction order.
    int k0 = 0;
    for (int slot = 1; slot <= s; ++slot)
        k0 += index.exp(slot);
    std::vector<int> params;
    params.reserve(static_cast<size_t>(s) - 1);
    for (int slot = 2; slot <= s; ++slot)
        params.push_back(index.exp(slot));

    const FormalSum expansion = box_expansion(n_, k0, params);
    if (expansion.coeff(index) != 1)
        throw std::logic_error("target must appear in its own expansion with coefficient 1");

    std::vector<int> shifted_exps(static_cast<size_t>(n_ - 1), 0);
    for (size_t i = 0; i < params.size(); ++i)
        shifted_exps[i] = params[i];
    const PrimeIndex shifted(n_, std::move(shifted_exps));

    HeckePolynomial acc =
        poly_mul(HeckePolynomial::generator(n_, k0), reduce_inner(shifted, &index));
    for (const auto& [term, c] : expansion.terms()) {
        if (term == index)
            continue;
        acc = poly_sub(acc, poly_scale(c, reduce_inner(term, &index)));
    }
    return acc;
}

HeckePolynomial reduce(const PrimeIndex& index) {
    Reducer reducer(index.rank());
    return reducer.reduce(index);
}

HeckePolynomial slot_polynomial_compositions(int n, int slot) {
    if (slot < 1 || slot > n - 1)
        throw std::invalid_argument("slot out of range");
    HeckePolynomial out(n);
    std::vector<int> parts;
    auto recurse = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            HeckeMonomial m;
            int sign = 1;
            for (int part : parts) {
                m = m.times(HeckeMonomial::generator(part));
                if (part % 2 == 0)
                    sign = -sign;
            }
            out.add_term(m, sign);
            return;
        }
        for (int part = 1; part <= remaining; ++part) {
            parts.push_back(part);
            self(self, remaining - part);
            parts.pop_back();
        }
    };
    recurse(recurse, slot);
    return out;
}

HeckePolynomial slot_polynomial_recurrence(int n, int slot) {
    if (slot < 1 || slot > n - 1)
        throw std::invalid_argument("slot out of range");
    std::vector<std::optional<HeckePolynomial>> memo(static_cast<size_t>(slot) + 1);
    std::function<const HeckePolynomial&(int)> at = [&](int l) -> const HeckePolynomial& {
        auto& slot_value = memo[static_cast<size_t>(l)];
        if (slot_value)
            return *slot_value;
        if (l == 0) {
            slot_value = HeckePolynomial::constant(n, 1);
            return *slot_value;
        }
        HeckePolynomial acc(n);
        for (int m = 1; m <= l; ++m) {
            HeckePolynomial term = poly_mul(HeckePolynomial::generator(n, m), at(l - m));
            acc = (m % 2 == 1) ? poly_add(acc, term) : poly_sub(acc, term);
        }
        slot_value = std::move(acc);
        return *slot_value;
    };
    return at(slot);
}

HeckePolynomial second_slot_closed_form(int n, int j) {
    if (n < 3)
        throw std::invalid_argument("second-slot closed form needs rank at least 3");
    if (j < 1)
        throw std::invalid_argument("exponent must be at least 1");
    const HeckePolynomial square =
        poly_mul(HeckePolynomial::generator(n, j), HeckePolynomial::generator(n, j));
    const HeckePolynomial cross =
        poly_mul(HeckePolynomial::generator(n, j - 1), HeckePolynomial::generator(n, j + 1));
    return poly_sub(square, cross);
}

namespace {

std::map<long long, int> prime_valuations(long long v) {
    std::map<long long, int> out;
    for (long long p = 2; p * p <= v; ++p)
        while (v % p == 0) {
            ++out[p];
            v /= p;
        }
    if (v > 1)
        ++out[v];
    return out;
}

}  // namespace

MultiPrimeReduction factorize(const GeneralIndex& index, Reducer& reducer) {
    const int n = index.rank();
    if (reducer.rank() != n)
        throw std::invalid_argument("rank mismatch");
    std::map<long long, std::vector<int>> valuations;
    for (int slot = 1; slot <= n - 1; ++slot) {
        const long long entry = index.entry(slot);
        if (entry < 1)
            throw std::invalid_argument("index entries must be positive");
        for (const auto& [p, v] : prime_valuations(entry)) {
            auto [it, inserted] =
                valuations.emplace(p, std::vector<int>(static_cast<size_t>(n - 1), 0));
            it->second[static_cast<size_t>(slot) - 1] = v;
        }
    }

    MultiPrimeReduction out;
    out.n = n;
    out.parity_power = index.last_sign() < 0 ? 1 : 0;
    // The reduction is uniform in the symbolic prime, so one cache serves
    // every prime that appears.
    for (const auto& [p, exps] : valuations)
        out.factors.emplace(p, reducer.reduce(PrimeIndex(n, exps)));
    return out;
}

MultiPrimeReduction factorize(const GeneralIndex& index) {
    Reducer reducer(index.rank());
    return factorize(index, reducer);
}

}  // namespace hecke
