#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "arithseq/bitvec.hpp"

namespace arithseq {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;  // witness values on failure, scope summary on pass
};

/// Exact linear complexity of the p-periodic Legendre sequence by residue
/// class mod 8: (p-1)/2, p, p-1, (p+1)/2 for p = 1, 3, 5, 7 mod 8.
std::uint64_t legendre_periodic_lc_formula(std::uint64_t p);

/// Whether s_{2n} = 1 - s_n holds wherever both indices are in range.
/// On failure *first_violation (if non-null) receives the smallest bad n.
bool satisfies_doubling_rule(const BitVec& bits, std::uint64_t* first_violation = nullptr);

/// Profile band for sequences with s_{2n} = 1 - s_n:
/// floor(N/2) <= L(S, N) <= floor(N/2) + 1 at every N up to the length.
/// Checks the doubling precondition first and reports the violating index.
CheckResult check_doubling_profile_band(const BitVec& bits, std::string_view label);

/// Two-sided profile band for the Legendre sequence of a prime p = 3 or 5 mod 8:
/// ceil((min(N, 2p-1) - 1)/2) <= L <= floor(min(N, 2p-2)/2) + 1 for N = 1..2p+5,
/// and L equals the closed-form periodic value for N >= 2p.
CheckResult check_legendre_profile_band(std::uint64_t p);
CheckResult check_legendre_profile_band(const BitVec& bits, std::uint64_t p);

}  // namespace arithseq
