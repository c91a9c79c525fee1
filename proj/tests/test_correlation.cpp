#include "doctest.h"

#include <random>

#include "arithseq/correlation.hpp"
#include "arithseq/errors.hpp"
#include "arithseq/numtheory.hpp"
#include "oracles.hpp"

using namespace arithseq;

namespace {

BitVec alternating(std::size_t len) {
    BitVec v(len);
    for (std::size_t i = 1; i < len; i += 2) v.set(i);
    return v;
}

}  // namespace

TEST_CASE("order-1 measure of the all-zero sequence is N") {
    const BitVec zeros(16);
    const CorrelationResult res = correlation_measure(zeros, {1, 16, 1 << 20, std::nullopt});
    CHECK(res.value == 16);
}

TEST_CASE("order-2 measure of the alternating sequence") {
    const CorrelationResult res =
        correlation_measure(alternating(8), {2, 8, 1 << 20, std::nullopt});
    CHECK(res.value == 7);  // D = (0, 1) gives -1 every term, M = 7
    CHECK(res.value == oracles::naive_correlation(alternating(8), 2, 8));
}

TEST_CASE("agreement with the naive implementation") {
    std::mt19937_64 rng(67);
    for (int k = 1; k <= 3; ++k)
        for (int trial = 0; trial < 6; ++trial) {
            const std::size_t n = k + 1 + rng() % 14;
            const BitVec bits = oracles::random_bits(n, rng);
            const CorrelationResult res =
                correlation_measure(bits, {k, n, 1 << 24, std::nullopt});
            CHECK(res.value == oracles::naive_correlation(bits, k, n));
        }
    SUBCASE("legendre sequences") {
        for (std::uint64_t p : {11, 31, 61}) {
            const BitSequence seq = generate_sequence(ArithFn::legendre(p), p);
            for (int k = 1; k <= (p <= 31 ? 3 : 2); ++k) {
                const CorrelationResult res =
                    correlation_measure(seq.bits, {k, p, 1 << 28, std::nullopt});
                CHECK(res.value == oracles::naive_correlation(seq.bits, k, p));
            }
        }
    }
}

TEST_CASE("budget accounting") {
    std::uint64_t count = 0;
    // enumerate directly for a small case: k = 2, n = 6
    for (std::uint32_t d1 = 0; d1 < 6; ++d1)
        for (std::uint32_t d2 = d1 + 1; d2 < 6; ++d2) count += 6 - d2;
    CHECK(correlation_budget(2, 6) == count);
    CHECK(correlation_budget(1, 10) == 55);

    const BitVec bits(500);
    CHECK_THROWS_AS(correlation_measure(bits, {3, 500, 1000, std::nullopt}), BudgetError);
    try {
        correlation_measure(bits, {3, 500, 1000, std::nullopt});
    } catch (const BudgetError& e) {
        CHECK(e.required() == correlation_budget(3, 500));
    }
}

TEST_CASE("fixed shift vectors maximize over M only") {
    const BitVec zeros(10);
    CorrelationQuery q;
    q.n = 10;
    q.shifts = std::vector<std::uint32_t>{0};
    CHECK(correlation_measure(zeros, q).value == 10);

    q.shifts = std::vector<std::uint32_t>{3, 2};
    CHECK_THROWS_AS(correlation_measure(zeros, q), std::invalid_argument);
    q.shifts = std::vector<std::uint32_t>{2, 2};
    CHECK_THROWS_AS(correlation_measure(zeros, q), std::invalid_argument);
}

TEST_CASE("balance sums") {
    CHECK(balance_sum(ArithFn::legendre(5), 4) == 0);
    for (std::uint64_t p : {5, 13, 97}) CHECK(balance_sum(ArithFn::legendre(p), p) == 0);
    CHECK(balance_sum(ArithFn::liouville_int(), 10) == 0);
    // +1 -1 -1 +1 -1 +1 -1 -1 +1 +1
    CHECK(balance_sum(ArithFn::liouville_int(), 9) == -1);
}

TEST_CASE("shifted liouville products") {
    const auto lam = liouville_sieve(200);
    std::int64_t brute = 0;
    for (std::uint64_t n = 1; n <= 100; ++n) brute += lam[n] * lam[n + 1];
    const std::uint32_t shifts01[] = {0, 1};
    CHECK(chowla_sum(100, shifts01) == brute);

    const std::uint32_t shifts0[] = {0};
    CHECK(chowla_sum(150, shifts0) == balance_sum(ArithFn::liouville_int(), 150));

    const std::uint32_t dup[] = {1, 1};
    CHECK_THROWS_AS(chowla_sum(10, dup), std::invalid_argument);
}
