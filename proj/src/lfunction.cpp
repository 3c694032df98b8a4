#include "hecke/lfunction.hpp"

#include <stdexcept>

namespace hecke {

EulerFactorSeries euler_factor(int n) {
    if (n < 2)
        throw std::invalid_argument("rank must be at least 2");
    EulerFactorSeries out;
    out.n = n;
    out.coeffs.reserve(static_cast<size_t>(n) + 1);
    out.coeffs.push_back(HeckePolynomial::constant(n, 1));
    for (int j = 1; j <= n - 1; ++j) {
        HeckePolynomial slot = slot_polynomial_compositions(n, j);
        out.coeffs.push_back(j % 2 == 1 ? poly_negate(slot) : slot);
    }
    out.coeffs.push_back(HeckePolynomial::constant(n, n % 2 == 0 ? 1 : -1));
    return out;
}

std::vector<HeckePolynomial> invert_factor(const EulerFactorSeries& factor, int upto) {
    if (upto < 0)
        throw std::invalid_argument("truncation order must be nonnegative");
    const int n = factor.n;
    if (factor.coeffs.size() != static_cast<size_t>(n) + 1)
        throw std::invalid_argument("malformed factor");
    if (factor.coeffs[0] != HeckePolynomial::constant(n, 1))
        throw std::invalid_argument("series inversion needs a unit constant term");

    std::vector<HeckePolynomial> inverse;
    inverse.reserve(static_cast<size_t>(upto) + 1);
    inverse.push_back(HeckePolynomial::constant(n, 1));
    for (int k = 1; k <= upto; ++k) {
        HeckePolynomial acc(n);
        for (int j = 1; j <= std::min(k, n); ++j)
            acc = poly_add(acc, poly_mul(factor.coeffs[static_cast<size_t>(j)],
                                         inverse[static_cast<size_t>(k - j)]));
        inverse.push_back(poly_negate(acc));
    }
    return inverse;
}

std::map<long long, MultiPrimeReduction> dirichlet_coefficients(int n, long long m_max) {
    if (m_max < 1)
        throw std::invalid_argument("coefficient range must be at least 1");
    std::map<long long, MultiPrimeReduction> out;
    Reducer reducer(n);
    for (long long m = 1; m <= m_max; ++m) {
        std::vector<long long> entries(static_cast<size_t>(n - 1), 1);
        entries[0] = m;
        out.emplace(m, factorize(GeneralIndex(n, std::move(entries)), reducer));
    }
    return out;
}

}  // namespace hecke
