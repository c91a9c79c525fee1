#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "arithseq/bitvec.hpp"
#include "arithseq/sequence.hpp"

namespace arithseq {

struct CorrelationQuery {
    int k = 2;                  // order (ignored when shifts are fixed)
    std::size_t n = 0;          // window length
    std::uint64_t caps = 400'000'000;  // max number of (M, D) pairs
    std::optional<std::vector<std::uint32_t>> shifts;  // fixed D = (d_1 < ... < d_k)
};

struct CorrelationResult {
    std::int64_t value = 0;  // C_k(S, N)
    std::vector<std::uint32_t> best_shifts;
    std::size_t best_m = 0;
    std::uint64_t pairs = 0;  // (M, D) pairs evaluated
};

/// Number of (M, D) pairs for a full order-k enumeration over an n-window.
std::uint64_t correlation_budget(int k, std::size_t n);

/// C_k(S, N) = max over shift vectors D and window lengths M of
/// |sum_{m=1}^M (-1)^{s_{m+d_1} + ... + s_{m+d_k}}|, with
/// 0 <= d_1 < ... < d_k <= N - M. With fixed shifts only M is maximized,
/// which yields the single-shift balance-style sums. Throws BudgetError when
/// the full enumeration would exceed the query cap.
CorrelationResult correlation_measure(const BitVec& s, const CorrelationQuery& q);

/// Exact signed sum of f(n) for n = 1..n_max (Legendre terms at multiples of p
/// contribute 0).
std::int64_t balance_sum(const ArithFn& fn, std::uint64_t n_max);

/// Exact sum of lambda(n + h_1) ... lambda(n + h_k) for n = 1..limit over
/// distinct non-negative shifts.
std::int64_t chowla_sum(std::uint64_t limit, std::span<const std::uint32_t> shifts);

}  // namespace arithseq
