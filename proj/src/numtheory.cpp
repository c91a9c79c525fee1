#include "arithseq/numtheory.hpp"

#include <stdexcept>

namespace arithseq {

std::vector<std::uint32_t> sieve_primes(std::uint64_t limit) {
    if (limit < 2) throw std::invalid_argument("sieve_primes: limit must be at least 2");
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t modpow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    b %= m;
    std::uint64_t r = 1 % m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

int legendre_symbol(std::int64_t n, std::uint64_t p) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("legendre_symbol: modulus must be an odd prime > 2");
    std::int64_t m = n % static_cast<std::int64_t>(p);
    if (m < 0) m += static_cast<std::int64_t>(p);
    if (m == 0) return 0;
    const std::uint64_t e = modpow(static_cast<std::uint64_t>(m), (p - 1) / 2, p);
    if (e == 1) return 1;
    if (e == p - 1) return -1;
    throw std::invalid_argument("legendre_symbol: modulus is not prime");
}

std::uint64_t least_qnr(std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("least_qnr: p must be an odd prime");
    for (std::uint64_t n = 2; n < p; ++n)
        if (legendre_symbol(static_cast<std::int64_t>(n), p) == -1) return n;
    throw std::logic_error("least_qnr: no non-residue found");
}

std::vector<std::int8_t> liouville_sieve(std::uint64_t limit) {
    if (limit == 0) return {};
    std::vector<std::uint32_t> spf(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf[i]) continue;
        for (std::uint64_t j = i; j <= limit; j += i)
            if (!spf[j]) spf[j] = static_cast<std::uint32_t>(i);
    }
    std::vector<std::int8_t> lam(limit + 1);
    lam[0] = 0;
    if (limit >= 1) lam[1] = 1;
    for (std::uint64_t i = 2; i <= limit; ++i) lam[i] = static_cast<std::int8_t>(-lam[i / spf[i]]);
    return lam;
}

LegendreTable::LegendreTable(std::uint64_t p) : p_(p), qr_(p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("LegendreTable: p must be an odd prime");
    for (std::uint64_t x = 1; x <= (p - 1) / 2; ++x) qr_.set(x * x % p);
}

}  // namespace arithseq
