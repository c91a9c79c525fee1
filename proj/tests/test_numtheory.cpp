#include "doctest.h"

#include <random>

#include "arithseq/errors.hpp"
#include "arithseq/f2poly.hpp"
#include "arithseq/numtheory.hpp"
#include "oracles.hpp"

using namespace arithseq;

TEST_CASE("prime sieve basics") {
    CHECK(sieve_primes(10) == std::vector<std::uint32_t>{2, 3, 5, 7});
    CHECK(sieve_primes(2) == std::vector<std::uint32_t>{2});
    CHECK_THROWS_AS(sieve_primes(1), std::invalid_argument);
    CHECK_THROWS_AS(sieve_primes(0), std::invalid_argument);
}

TEST_CASE("prime counts against trial division") {
    CHECK(sieve_primes(10000).size() == 1229);
    CHECK(sieve_primes(2000).size() == oracles::trial_division_prime_count(2000));
}

TEST_CASE("legendre symbol examples") {
    CHECK(legendre_symbol(1, 7) == 1);
    CHECK(legendre_symbol(2, 7) == 1);  // 3^2 = 2 mod 7
    CHECK(legendre_symbol(3, 5) == -1);
    CHECK(legendre_symbol(10, 5) == 0);
    CHECK(legendre_symbol(-1, 5) == 1);  // -1 = 4 = 2^2 mod 5
    CHECK_THROWS_AS(legendre_symbol(3, 8), std::invalid_argument);
    CHECK_THROWS_AS(legendre_symbol(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(legendre_symbol(3, 2), std::invalid_argument);
}

TEST_CASE("legendre symbol agrees with the residue bitmap") {
    for (std::uint64_t p : {5, 101, 997}) {
        const LegendreTable table(p);
        for (std::uint64_t n = 0; n < 2 * p; ++n)
            CHECK(legendre_symbol(static_cast<std::int64_t>(n), p) == table.symbol(n));
    }
}

TEST_CASE("legendre multiplicativity on random pairs") {
    std::mt19937_64 rng(7);
    for (std::uint32_t p : sieve_primes(1000)) {
        if (p == 2) continue;
        for (int trial = 0; trial < 8; ++trial) {
            const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % (p - 1));
            const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % (p - 1));
            CHECK(legendre_symbol(m * n, p) == legendre_symbol(m, p) * legendre_symbol(n, p));
        }
    }
}

TEST_CASE("doubling sign flip for p = 3, 5 mod 8") {
    for (std::uint32_t p : sieve_primes(2000)) {
        if (p % 8 != 3 && p % 8 != 5) continue;
        for (std::int64_t n = 1; n < 50; ++n) {
            if (n % p == 0) continue;
            CHECK(legendre_symbol(2 * n, p) == -legendre_symbol(n, p));
        }
    }
}

TEST_CASE("least non-residue examples and primality") {
    CHECK(least_qnr(3) == 2);
    CHECK(least_qnr(7) == 3);
    CHECK(least_qnr(17) == 3);
    for (std::uint32_t p : sieve_primes(10000)) {
        if (p == 2) continue;
        const std::uint64_t q = least_qnr(p);
        CHECK(is_prime(q));
        // N(p) = 2 exactly for p = 3, 5 mod 8 (2 is a residue iff p = 1, 7 mod 8)
        CHECK((q == 2) == (p % 8 == 3 || p % 8 == 5));
    }
}

TEST_CASE("liouville sieve values and doubling") {
    const auto lam = liouville_sieve(500000);
    CHECK(lam[1] == 1);
    CHECK(lam[2] == -1);
    CHECK(lam[8] == -1);  // 2^3
    CHECK(lam[9] == 1);
    for (std::uint64_t n = 1; 2 * n < lam.size(); ++n) CHECK(lam[2 * n] == -lam[n]);
    CHECK(liouville_sieve(0).empty());
}

TEST_CASE("liouville sieve against trial factorization") {
    const auto lam = liouville_sieve(2000);
    for (std::uint64_t n = 1; n <= 2000; ++n)
        CHECK(lam[n] == (oracles::omega_int(n) % 2 ? -1 : 1));
}
