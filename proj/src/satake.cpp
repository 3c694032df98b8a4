#include "hecke/satake.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace hecke {

namespace {

using Complex = std::complex<double>;

constexpr double kAnnulusInner = 0.5;
constexpr double kAnnulusOuter = 2.0;
constexpr int kMaxRedrawAttempts = 64;

// Uniform double in [0, 1) from the top 53 bits of a fully specified
// engine, so draws do not depend on the standard library's distributions.
double unit_draw(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

Complex pow_int(Complex base, long long e) {
    Complex acc(1.0, 0.0);
    while (e > 0) {
        if (e & 1)
            acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// Determinant by Gaussian elimination with partial pivoting; rows is an
// n*n row-major matrix, destroyed in place.
Complex determinant(std::vector<Complex>& rows, int n) {
    Complex det(1.0, 0.0);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(rows[static_cast<size_t>(col) * n + col]);
        for (int r = col + 1; r < n; ++r) {
            const double mag = std::abs(rows[static_cast<size_t>(r) * n + col]);
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best == 0.0)
            return Complex(0.0, 0.0);
        if (pivot != col) {
            for (int c = 0; c < n; ++c)
                std::swap(rows[static_cast<size_t>(pivot) * n + c],
                          rows[static_cast<size_t>(col) * n + c]);
            det = -det;
        }
        const Complex diag = rows[static_cast<size_t>(col) * n + col];
        det *= diag;
        for (int r = col + 1; r < n; ++r) {
            const Complex factor = rows[static_cast<size_t>(r) * n + col] / diag;
            for (int c = col; c < n; ++c)
                rows[static_cast<size_t>(r) * n + c] -=
                    factor * rows[static_cast<size_t>(col) * n + c];
        }
    }
    return det;
}

double min_separation(const std::vector<Complex>& alpha) {
    double sep = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < alpha.size(); ++i)
        for (size_t j = i + 1; j < alpha.size(); ++j)
            sep = std::min(sep, std::abs(alpha[i] - alpha[j]));
    return sep;
}

void check_model(const SatakeModel& model) {
    if (model.n < 2 || model.alpha.size() != static_cast<size_t>(model.n))
        throw std::invalid_argument("malformed model");
    if (min_separation(model.alpha) < kMinSeparation)
        throw std::runtime_error("model parameters too close: bialternant is ill-conditioned");
}

}  // namespace

SatakeModel random_model(int n, std::uint64_t seed) {
    if (n < 2)
        throw std::invalid_argument("model rank must be at least 2");
    std::mt19937_64 gen(seed);
    for (int attempt = 0; attempt < kMaxRedrawAttempts; ++attempt) {
        std::vector<Complex> alpha;
        alpha.reserve(static_cast<size_t>(n));
        Complex prod(1.0, 0.0);
        for (int i = 0; i < n - 1; ++i) {
            // Uniform in area over the annulus.
            const double u = unit_draw(gen);
            const double r = std::sqrt(kAnnulusInner * kAnnulusInner +
                                       u * (kAnnulusOuter * kAnnulusOuter -
                                            kAnnulusInner * kAnnulusInner));
            const double theta = 2.0 * std::numbers::pi * unit_draw(gen);
            alpha.push_back(std::polar(r, theta));
            prod *= alpha.back();
        }
        alpha.push_back(Complex(1.0, 0.0) / prod);
        if (min_separation(alpha) >= kMinSeparation)
            return SatakeModel{n, seed, std::move(alpha)};
    }
    throw std::runtime_error("could not draw separated model parameters");
}

std::complex<double> eval_index(const SatakeModel& model, const PrimeIndex& index) {
    if (index.rank() != model.n)
        throw std::invalid_argument("rank mismatch");
    check_model(model);
    const int n = model.n;

    // Partition: lambda_j = K_j + ... + K_{n-1}, lambda_n = 0.
    std::vector<long long> lambda(static_cast<size_t>(n), 0);
    for (int j = n - 2; j >= 0; --j)
        lambda[static_cast<size_t>(j)] =
            lambda[static_cast<size_t>(j) + 1] + index.exps()[static_cast<size_t>(j)];

    std::vector<Complex> numerator(static_cast<size_t>(n) * n);
    std::vector<Complex> vandermonde(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const long long shift = n - 1 - j;
            numerator[static_cast<size_t>(i) * n + j] =
                pow_int(model.alpha[static_cast<size_t>(i)], lambda[static_cast<size_t>(j)] + shift);
            vandermonde[static_cast<size_t>(i) * n + j] =
                pow_int(model.alpha[static_cast<size_t>(i)], shift);
        }
    return determinant(numerator, n) / determinant(vandermonde, n);
}

std::complex<double> eval_sum(const SatakeModel& model, const FormalSum& sum) {
    if (sum.rank() != model.n)
        throw std::invalid_argument("rank mismatch");
    Complex acc(0.0, 0.0);
    for (const auto& [idx, c] : sum.terms())
        acc += c.convert_to<double>() * eval_index(model, idx);
    return acc;
}

std::complex<double> eval_poly(const SatakeModel& model, const HeckePolynomial& poly,
                               int parity_value) {
    if (poly.rank() != model.n)
        throw std::invalid_argument("rank mismatch");
    if (parity_value != 1 && parity_value != -1)
        throw std::invalid_argument("parity value must be +1 or -1");
    std::map<int, Complex> generator_values;
    auto generator_value = [&](int level) {
        auto it = generator_values.find(level);
        if (it == generator_values.end())
            it = generator_values
                     .emplace(level, eval_index(model, PrimeIndex::row(model.n, level)))
                     .first;
        return it->second;
    };

    Complex acc(0.0, 0.0);
    for (const auto& [monomial, c] : poly.terms()) {
        Complex term(c.convert_to<double>(), 0.0);
        for (const auto& [level, mult] : monomial.factors())
            term *= pow_int(generator_value(level), mult);
        acc += term;
    }
    if (poly.parity_power() % 2 == 1 && parity_value == -1)
        acc = -acc;
    return acc;
}

std::complex<double> eval_general(const std::map<long long, SatakeModel>& models,
                                  const MultiPrimeReduction& reduction,
                                  int parity_value) {
    if (parity_value != 1 && parity_value != -1)
        throw std::invalid_argument("parity value must be +1 or -1");
    Complex acc(1.0, 0.0);
    for (const auto& [p, poly] : reduction.factors) {
        auto it = models.find(p);
        if (it == models.end())
            throw std::invalid_argument("missing model for a prime in the reduction");
        acc *= eval_poly(it->second, poly);
    }
    if (reduction.parity_power % 2 == 1 && parity_value == -1)
        acc = -acc;
    return acc;
}

double relative_error(std::complex<double> value, std::complex<double> reference) {
    return std::abs(value - reference) / (1.0 + std::abs(reference));
}

}  // namespace hecke
