#include "hecke/identities.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {

std::vector<long long> sorted_divisors(long long v) {
    std::vector<long long> divs;
    for (long long d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            divs.push_back(d);
            if (d != v / d)
                divs.push_back(v / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Walks the exponent box 0 <= k_i <= bounds_i, invoking fn on every point.
template <typename Fn>
void for_each_box_point(const std::vector<int>& bounds, Fn&& fn) {
    std::vector<int> k(bounds.size(), 0);
    for (;;) {
        fn(k);
        size_t i = 0;
        while (i < k.size() && k[i] == bounds[i])
            k[i++] = 0;
        if (i == k.size())
            return;
        ++k[i];
    }
}

// Prime-power exponent pattern shared by the two box expansions: slot 1
// carries k0 + K_1 - 2k_1 - k_2 - ... - k_r, slot i carries
// K_i + k_{i-1} - k_i for 2 <= i <= r, slot r+1 (when it exists) carries k_r.
std::vector<int> box_point_exponents(int n, int k0, const std::vector<int>& ks,
                                     const std::vector<int>& k) {
    const size_t r = ks.size();
    std::vector<int> exps(static_cast<size_t>(n - 1), 0);
    int slot1 = k0 + ks[0] - 2 * k[0];
    for (size_t i = 1; i < r; ++i)
        slot1 -= k[i];
    exps[0] = slot1;
    for (size_t i = 1; i < r; ++i)
        exps[i] = ks[i] + k[i - 1] - k[i];
    if (r < static_cast<size_t>(n - 1))
        exps[r] = k[r - 1];
    return exps;
}

void check_box_preconditions(int n, int k0, const std::vector<int>& ks) {
    const size_t r = ks.size();
    if (r < 1 || r > static_cast<size_t>(n - 1))
        throw std::invalid_argument("parameter count must lie in [1, n-1]");
    int total = 0;
    for (int v : ks) {
        if (v < 0)
            throw std::invalid_argument("box parameters must be nonnegative");
        total += v;
    }
    if (k0 < total)
        throw std::invalid_argument("multiplier exponent must dominate the parameter sum");
}

}  // namespace

std::vector<DivisorTuple> divisor_tuples(long long m, const GeneralIndex& index) {
    if (m < 1)
        throw std::invalid_argument("multiplier must be positive");
    const int n = index.rank();
    std::vector<std::vector<long long>> slot_divisors;
    for (int slot = 1; slot <= n - 1; ++slot)
        slot_divisors.push_back(sorted_divisors(index.entry(slot)));

    std::vector<DivisorTuple> out;
    std::vector<long long> c(static_cast<size_t>(n), 1);
    auto recurse = [&](auto&& self, int slot, long long running) -> void {
        if (slot == n) {
            c[static_cast<size_t>(n) - 1] = m / running;
            out.push_back(DivisorTuple{c});
            return;
        }
        for (long long d : slot_divisors[static_cast<size_t>(slot) - 1]) {
            if (m % (running * d) != 0)
                continue;
            c[static_cast<size_t>(slot) - 1] = d;
            self(self, slot + 1, running * d);
        }
    };
    recurse(recurse, 1, 1);
    return out;
}

FormalSum hecke_product(int k0, const PrimeIndex& index) {
    if (k0 < 0)
        throw std::invalid_argument("multiplier exponent must be nonnegative");
    const int n = index.rank();
    const std::vector<int>& K = index.exps();
    FormalSum out(n);

    for_each_box_point(K, [&](const std::vector<int>& k) {
        const int used = std::accumulate(k.begin(), k.end(), 0);
        if (used > k0)
            return;
        std::vector<int> exps(K.size());
        exps[0] = K[0] + (k0 - used) - k[0];
        for (size_t i = 1; i < K.size(); ++i)
            exps[i] = K[i] + k[i - 1] - k[i];
        out.add_term(PrimeIndex(n, std::move(exps)), 1);
    });
    return out;
}

FormalSum box_expansion(int n, int k0, const std::vector<int>& ks) {
    check_box_preconditions(n, k0, ks);
    FormalSum out(n);
    for_each_box_point(ks, [&](const std::vector<int>& k) {
        out.add_term(PrimeIndex(n, box_point_exponents(n, k0, ks, k)), 1);
    });
    return out;
}

std::string ScaledIndex::str() const {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < exps.size(); ++i) {
        if (i)
            out << ',';
        if (exps[i] > 0) {
            out << 'p';
            if (exps[i] > 1)
                out << '^' << exps[i];
            out << '*';
        }
        if (i + 1 == exps.size() && base.last_sign() < 0)
            out << '-';
        out << base.entries()[i];
    }
    out << ')';
    return out.str();
}

std::vector<std::pair<BigInt, ScaledIndex>> scaled_box_expansion(
    int k0, const std::vector<int>& ks, const GeneralIndex& base,
    bool prime_coprime_to_base) {
    if (!prime_coprime_to_base)
        throw std::invalid_argument("the prime must be declared coprime to the base entries");
    const int n = base.rank();
    check_box_preconditions(n, k0, ks);

    std::map<std::vector<int>, BigInt> acc;
    for_each_box_point(ks, [&](const std::vector<int>& k) {
        acc[box_point_exponents(n, k0, ks, k)] += 1;
    });

    std::vector<std::pair<BigInt, ScaledIndex>> out;
    out.reserve(acc.size());
    for (auto& [exps, c] : acc)
        out.emplace_back(c, ScaledIndex{exps, base});
    return out;
}

PrimeIndex bumped_index(int n, int j, int k) {
    if (j < 0)
        throw std::invalid_argument("row exponent must be nonnegative");
    if (k < 0 || k > n)
        throw std::invalid_argument("slot out of range");
    if (k == 0 || k == n)
        return PrimeIndex::row(n, j);
    if (k == 1)
        return PrimeIndex::row(n, j + 1);
    std::vector<int> exps(static_cast<size_t>(n - 1), 0);
    exps[0] = j;
    exps[static_cast<size_t>(k) - 1] += 1;
    return PrimeIndex(n, std::move(exps));
}

StepIdentity step_identity(int n, int j, int k) {
    if (n < 3)
        throw std::invalid_argument("the step identity is provided for rank at least 3");
    if (j < 1)
        throw std::invalid_argument("row exponent must be at least 1");
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("slot out of range");
    StepIdentity out{bumped_index(n, j, 0), bumped_index(n, 0, k), FormalSum(n)};
    out.product.add_term(bumped_index(n, j, k), 1);
    out.product.add_term(bumped_index(n, j - 1, k + 1), 1);
    return out;
}

}  // namespace hecke
