#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "hecke/formal_sum.hpp"
#include "hecke/index.hpp"
#include "hecke/polynomial.hpp"
#include "hecke/serialize.hpp"

using namespace hecke;

namespace {

HeckePolynomial t(int n, int level) { return HeckePolynomial::generator(n, level); }

// Small random polynomial: a handful of terms with generator levels <= 4,
// multiplicities <= 2, coefficients in [-9, 9].
HeckePolynomial random_poly(std::mt19937_64& gen, int n) {
    HeckePolynomial p(n);
    const int terms = 1 + static_cast<int>(gen() % 4);
    for (int i = 0; i < terms; ++i) {
        HeckeMonomial m;
        const int factors = static_cast<int>(gen() % 3);
        for (int f = 0; f < factors; ++f) {
            const int level = 1 + static_cast<int>(gen() % 4);
            m = m.times(HeckeMonomial::generator(level));
        }
        p.add_term(m, static_cast<int>(gen() % 19) - 9);
    }
    return p;
}

}  // namespace

TEST_CASE("index construction validates rank, length, and sign of entries") {
    CHECK_THROWS_AS(PrimeIndex(1, {}), std::invalid_argument);
    CHECK_THROWS_AS(PrimeIndex(3, {1}), std::invalid_argument);
    CHECK_THROWS_AS(PrimeIndex(3, {1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(GeneralIndex(3, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(GeneralIndex(3, {2, 3}, 0), std::invalid_argument);

    const PrimeIndex idx(4, {1, 0, 2});
    CHECK(idx.weight() == 3);
    CHECK(idx.last_nonzero_slot() == 3);
    CHECK(idx.exp(1) == 1);
    CHECK_FALSE(idx.is_zero());
    CHECK(PrimeIndex::zero(4).is_zero());
    CHECK(PrimeIndex::zero(4).last_nonzero_slot() == 0);
    CHECK(PrimeIndex::row(5, 3).exps() == std::vector<int>{3, 0, 0, 0});
    CHECK(PrimeIndex::unit_slot(4, 3).exps() == std::vector<int>{0, 0, 1});
    CHECK(idx.reversed().exps() == std::vector<int>{2, 0, 1});
}

TEST_CASE("signed general indices track the last-entry sign") {
    const auto idx = GeneralIndex::from_signed(3, {12, -5});
    CHECK(idx.entries() == std::vector<long long>{12, 5});
    CHECK(idx.last_sign() == -1);
    const auto other = GeneralIndex::from_signed(3, {5, -7});
    const auto prod = idx.times(other);
    CHECK(prod.entries() == std::vector<long long>{60, 35});
    CHECK(prod.last_sign() == +1);
}

TEST_CASE("reduction order compares last nonzero slot, then tail exponents") {
    const PrimeIndex a(3, {2, 0});
    const PrimeIndex b(3, {0, 1});
    CHECK(reduction_order_less(a, b));
    CHECK_FALSE(reduction_order_less(b, a));

    // Same tail, different slot 1: equivalent, neither below the other.
    const PrimeIndex c(3, {5, 1});
    const PrimeIndex d(3, {0, 1});
    CHECK_FALSE(reduction_order_less(c, d));
    CHECK_FALSE(reduction_order_less(d, c));

    const PrimeIndex e(4, {0, 1, 2});
    const PrimeIndex f(4, {0, 2, 2});
    CHECK(reduction_order_less(e, f));
    CHECK(reduction_order_less(PrimeIndex(4, {9, 9, 0}), e));
    CHECK(reduction_order_less(PrimeIndex::zero(4), PrimeIndex::row(4, 1)));
}

TEST_CASE("formal sums cancel to the canonical form") {
    FormalSum s(3);
    s.add_term(PrimeIndex(3, {2, 0}), 1);
    s.add_term(PrimeIndex(3, {0, 1}), 2);
    s.add_term(PrimeIndex(3, {2, 0}), -1);
    CHECK(s.size() == 1);
    CHECK(s.coeff(PrimeIndex(3, {0, 1})) == 2);
    CHECK(s.coeff(PrimeIndex(3, {2, 0})) == 0);
    CHECK_THROWS_AS(s.add_term(PrimeIndex(4, {0, 0, 1}), 1), std::invalid_argument);
}

TEST_CASE("formal sum accumulation is order independent") {
    std::mt19937_64 gen(7);
    std::vector<std::pair<PrimeIndex, BigInt>> entries;
    for (int i = 0; i < 40; ++i) {
        PrimeIndex idx(3, {static_cast<int>(gen() % 3), static_cast<int>(gen() % 3)});
        entries.emplace_back(idx, static_cast<int>(gen() % 11) - 5);
    }
    FormalSum in_order(3);
    for (const auto& [idx, c] : entries)
        in_order.add_term(idx, c);
    std::shuffle(entries.begin(), entries.end(), gen);
    FormalSum shuffled(3);
    for (const auto& [idx, c] : entries)
        shuffled.add_term(idx, c);
    CHECK(in_order == shuffled);
}

TEST_CASE("monomial arithmetic and canonical order") {
    CHECK(HeckeMonomial::generator(0).is_constant());
    const auto m = HeckeMonomial::generator(1).times(HeckeMonomial::generator(2));
    CHECK(m.total_degree() == 2);
    CHECK(m.times(HeckeMonomial::generator(1)).factors() ==
          std::map<int, int>{{1, 2}, {2, 1}});

    MonomialOrder less;
    const auto unit = HeckeMonomial();
    const auto t3 = HeckeMonomial::generator(3);
    const auto t1t2 = HeckeMonomial::generator(1).times(HeckeMonomial::generator(2));
    const auto t1sq = HeckeMonomial::generator(1).times(HeckeMonomial::generator(1));
    const auto t1cube = t1sq.times(HeckeMonomial::generator(1));
    CHECK(less(unit, t3));
    CHECK(less(t3, t1t2));    // lower total degree first
    CHECK(less(t1sq, t1t2));  // (1,2) before (1,1),(2,1): first pair decides
    CHECK(less(t1t2, t1cube));
}

TEST_CASE("polynomial addition cancels exactly") {
    const int n = 3;
    CHECK(poly_add(t(n, 1), poly_negate(t(n, 1))).is_zero());
    const auto diff = poly_sub(poly_mul(t(n, 1), t(n, 1)), t(n, 2));
    CHECK(poly_add(diff, t(n, 2)) == poly_mul(t(n, 1), t(n, 1)));
    CHECK(poly_add(HeckePolynomial::constant(n, 1), HeckePolynomial::constant(n, 1)) ==
          HeckePolynomial::constant(n, 2));
}

TEST_CASE("polynomial products merge multiplicities and fold parity") {
    const int n = 3;
    auto sq = poly_mul(t(n, 1), t(n, 1));
    CHECK(sq.terms().size() == 1);
    CHECK(sq.terms().begin()->first.factors() == std::map<int, int>{{1, 2}});

    const auto plus = poly_add(t(n, 1), HeckePolynomial::constant(n, 1));
    const auto minus = poly_sub(t(n, 1), HeckePolynomial::constant(n, 1));
    CHECK(poly_mul(minus, plus) == poly_sub(sq, HeckePolynomial::constant(n, 1)));

    const auto eps = HeckePolynomial::parity_symbol(n);
    CHECK(poly_mul(eps, poly_mul(eps, t(n, 1))) == t(n, 1));
    CHECK(poly_mul(eps, eps) == HeckePolynomial::constant(n, 1));
    CHECK(poly_mul(eps, t(n, 1)).parity_power() == 1);
}

TEST_CASE("mixed-parity sums and rank mismatches are rejected") {
    const int n = 3;
    const auto eps = HeckePolynomial::parity_symbol(n);
    CHECK_THROWS_AS(poly_add(eps, HeckePolynomial::constant(n, 1)), std::invalid_argument);
    CHECK(poly_add(HeckePolynomial(n), eps) == eps);
    CHECK(poly_add(eps, HeckePolynomial(n)) == eps);
    CHECK_THROWS_AS(poly_add(t(3, 1), t(4, 1)), std::invalid_argument);
    CHECK_THROWS_AS(poly_mul(t(3, 1), t(4, 1)), std::invalid_argument);
}

TEST_CASE("scaling by zero yields the zero polynomial with parity zero") {
    const auto eps = HeckePolynomial::parity_symbol(3);
    const auto zero = poly_scale(0, eps);
    CHECK(zero.is_zero());
    CHECK(zero.parity_power() == 0);
}

TEST_CASE("ring axioms hold on random polynomials") {
    std::mt19937_64 gen(42);
    for (int round = 0; round < 60; ++round) {
        const auto a = random_poly(gen, 3);
        const auto b = random_poly(gen, 3);
        const auto c = random_poly(gen, 3);
        CHECK(poly_add(a, b) == poly_add(b, a));
        CHECK(poly_add(poly_add(a, b), c) == poly_add(a, poly_add(b, c)));
        CHECK(poly_mul(a, b) == poly_mul(b, a));
        CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
        CHECK(poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c)));
    }
}

TEST_CASE("rebuilding from canonical terms is the identity") {
    std::mt19937_64 gen(11);
    for (int round = 0; round < 20; ++round) {
        const auto p = random_poly(gen, 4);
        HeckePolynomial rebuilt(4);
        for (const auto& [m, c] : p.terms())
            rebuilt.add_term(m, c);
        CHECK(rebuilt == p);
    }
}

TEST_CASE("polynomial JSON uses string coefficients and sorted monomials") {
    const int n = 3;
    const auto poly = poly_sub(poly_mul(t(n, 1), t(n, 1)), t(n, 2));
    const auto j = to_json(poly);
    CHECK(j["n"] == 3);
    CHECK(j["parity"] == 0);
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["coeff"] == "-1");
    CHECK(j["terms"][0]["monomial"] == nlohmann::ordered_json::array({{2, 1}}));
    CHECK(j["terms"][1]["coeff"] == "1");
    CHECK(j["terms"][1]["monomial"] == nlohmann::ordered_json::array({{1, 2}}));
}

TEST_CASE("formal sum JSON lists indices in lexicographic order") {
    FormalSum s(3);
    s.add_term(PrimeIndex(3, {2, 0}), 1);
    s.add_term(PrimeIndex(3, {0, 1}), 1);
    const auto j = to_json(s);
    CHECK(j["n"] == 3);
    CHECK(j["terms"][0]["index"] == nlohmann::ordered_json::array({0, 1}));
    CHECK(j["terms"][1]["index"] == nlohmann::ordered_json::array({2, 0}));
}

TEST_CASE("printing is stable and readable") {
    const int n = 3;
    CHECK(HeckePolynomial(n).str() == "0");
    CHECK(poly_sub(poly_mul(t(n, 1), t(n, 1)), t(n, 2)).str() == "-T(p^2) + T(p)^2");
    CHECK(PrimeIndex(3, {1, 2}).str() == "(1,2)");
    CHECK(GeneralIndex::from_signed(3, {12, -5}).str() == "(12,-5)");
}
