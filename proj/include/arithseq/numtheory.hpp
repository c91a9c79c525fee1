#pragma once

#include <cstdint>
#include <vector>

#include "arithseq/bitvec.hpp"

namespace arithseq {

/// All primes in [2, limit], ascending. Throws std::invalid_argument for limit < 2.
std::vector<std::uint32_t> sieve_primes(std::uint64_t limit);

/// Trial-division primality test.
bool is_prime(std::uint64_t n);

/// b^e mod m for m < 2^32.
std::uint64_t modpow(std::uint64_t b, std::uint64_t e, std::uint64_t m);

/// Legendre symbol (n/p) in {-1, 0, +1} by Euler's criterion.
/// Throws std::invalid_argument if p is even or p < 3 (and on detectably composite p).
int legendre_symbol(std::int64_t n, std::uint64_t p);

/// Least quadratic non-residue modulo an odd prime p. Always prime, always >= 2.
std::uint64_t least_qnr(std::uint64_t p);

/// Liouville lambda(n) for n = 0..limit (entry 0 is unused and set to 0).
/// Smallest-prime-factor sieve. Returns an empty vector for limit = 0.
std::vector<std::int8_t> liouville_sieve(std::uint64_t limit);

/// Quadratic-residue bitmap for one odd prime; amortizes bulk symbol lookups.
class LegendreTable {
public:
    explicit LegendreTable(std::uint64_t p);

    std::uint64_t p() const { return p_; }

    /// (n/p) in {-1, 0, +1}.
    int symbol(std::uint64_t n) const {
        const std::uint64_t m = n % p_;
        if (m == 0) return 0;
        return qr_.get(m) ? 1 : -1;
    }

    /// Sequence bit s_n: 0 for residues and multiples of p, 1 for non-residues.
    bool bit(std::uint64_t n) const {
        const std::uint64_t m = n % p_;
        return m != 0 && !qr_.get(m);
    }

private:
    std::uint64_t p_;
    BitVec qr_;
};

}  // namespace arithseq
