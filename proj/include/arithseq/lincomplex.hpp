#pragma once

#include <cstdint>
#include <vector>

#include "arithseq/bitvec.hpp"

namespace arithseq {

/// The map N -> L(S, N) for N = 1..N_max, with deviation statistics from N/2.
struct LCProfile {
    /// values[N - 1] = L(S, N).
    std::vector<std::uint32_t> values;

    /// Connection polynomial of the final state: bit i is c_i, with the
    /// recurrence s_{n+L} = c_{L-1} s_{n+L-1} + ... + c_0 s_n (bit 0 is always
    /// set once L > 0). Sized to hold final_l() + 1 bits.
    std::vector<std::uint64_t> connection;

    std::uint32_t l(std::size_t n) const { return values.at(n - 1); }
    std::uint32_t final_l() const { return values.empty() ? 0 : values.back(); }

    /// max over N of |2 L(S, N) - N| and the smallest N attaining it.
    std::int64_t max_dev2 = 0;
    std::size_t argmax_n = 0;
    double max_dev() const { return static_cast<double>(max_dev2) / 2.0; }
};

/// Incremental Berlekamp-Massey over the first n_max bits. Conventions: an
/// all-zero prefix has L = 0, and a prefix 0,...,0,1 of length N has L = N.
/// n_max = 0 gives an empty profile. Throws std::invalid_argument when
/// n_max exceeds the sequence length.
LCProfile bm_profile(const BitVec& s, std::size_t n_max);

/// L(S) of a T-periodic sequence, recovered from its first 2T terms.
/// Throws std::invalid_argument when fewer than 2T terms are available.
std::uint32_t linear_complexity_periodic(const BitVec& s, std::size_t period);

}  // namespace arithseq
