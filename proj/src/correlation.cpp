#include "arithseq/correlation.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "arithseq/errors.hpp"
#include "arithseq/f2poly.hpp"
#include "arithseq/numtheory.hpp"

namespace arithseq {

namespace {

// Scans all M for one shift vector; updates the running best.
void scan_shift_vector(const BitVec& s, std::span<const std::uint32_t> d, std::size_t n,
                       CorrelationResult& best) {
    const std::uint32_t dk = d.back();
    std::int64_t acc = 0;
    for (std::size_t m = 1; m + dk <= n; ++m) {
        bool x = false;
        for (std::uint32_t dj : d) x ^= s.get(m + dj - 1);
        acc += x ? -1 : 1;
        if (std::abs(acc) > best.value) {
            best.value = std::abs(acc);
            best.best_shifts.assign(d.begin(), d.end());
            best.best_m = m;
        }
    }
}

}  // namespace

std::uint64_t correlation_budget(int k, std::size_t n) {
    if (k < 1 || n == 0) return 0;
    // sum over d_k of C(d_k, k-1) * (n - d_k), guarding against overflow
    std::uint64_t total = 0;
    for (std::uint64_t dk = static_cast<std::uint64_t>(k) - 1; dk < n; ++dk) {
        unsigned __int128 binom = 1;
        for (int i = 1; i <= k - 1; ++i) binom = binom * (dk - (k - 1) + i) / i;
        const unsigned __int128 contrib = binom * (n - dk);
        if (contrib + total > static_cast<unsigned __int128>(~std::uint64_t{0}))
            return ~std::uint64_t{0};
        total += static_cast<std::uint64_t>(contrib);
    }
    return total;
}

CorrelationResult correlation_measure(const BitVec& s, const CorrelationQuery& q) {
    if (q.n == 0 || q.n > s.size())
        throw std::invalid_argument("correlation_measure: window must be in [1, length]");

    CorrelationResult best;
    if (q.shifts) {
        const auto& d = *q.shifts;
        if (d.empty()) throw std::invalid_argument("correlation_measure: empty shift vector");
        if (!std::is_sorted(d.begin(), d.end()) ||
            std::adjacent_find(d.begin(), d.end()) != d.end())
            throw std::invalid_argument("correlation_measure: shifts must be strictly increasing");
        if (d.back() >= q.n)
            throw std::invalid_argument("correlation_measure: largest shift leaves no window");
        best.pairs = q.n - d.back();
        scan_shift_vector(s, d, q.n, best);
        return best;
    }

    if (q.k < 1) throw std::invalid_argument("correlation_measure: order must be >= 1");
    const int k = q.k;
    if (static_cast<std::size_t>(k) > q.n)
        throw std::invalid_argument("correlation_measure: order exceeds window");
    const std::uint64_t required = correlation_budget(k, q.n);
    if (required > q.caps) throw BudgetError(required, q.caps);
    best.pairs = required;

    // lexicographic enumeration of d_1 < ... < d_k over [0, n-1]
    std::vector<std::uint32_t> d(k);
    for (int i = 0; i < k; ++i) d[i] = static_cast<std::uint32_t>(i);
    while (true) {
        scan_shift_vector(s, d, q.n, best);
        int i = k - 1;
        while (i >= 0 && d[i] == q.n - static_cast<std::size_t>(k - i)) --i;
        if (i < 0) break;
        ++d[i];
        for (int j = i + 1; j < k; ++j) d[j] = d[j - 1] + 1;
    }
    return best;
}

std::int64_t balance_sum(const ArithFn& fn, std::uint64_t n_max) {
    std::int64_t sum = 0;
    switch (fn.kind) {
        case ArithKind::legendre: {
            const LegendreTable table(fn.p);
            for (std::uint64_t n = 1; n <= n_max; ++n) sum += table.symbol(n);
            break;
        }
        case ArithKind::liouville_int: {
            const auto lam = liouville_sieve(n_max);
            for (std::uint64_t n = 1; n <= n_max; ++n) sum += lam[n];
            break;
        }
        case ArithKind::liouville_f2: {
            const F2LiouvilleSieve sieve(n_max == 0 ? 1 : n_max);
            for (std::uint64_t n = 1; n <= n_max; ++n) sum += sieve.value(n);
            break;
        }
    }
    return sum;
}

std::int64_t chowla_sum(std::uint64_t limit, std::span<const std::uint32_t> shifts) {
    if (shifts.empty()) throw std::invalid_argument("chowla_sum: need at least one shift");
    std::set<std::uint32_t> uniq(shifts.begin(), shifts.end());
    if (uniq.size() != shifts.size())
        throw std::invalid_argument("chowla_sum: shifts must be distinct");
    const std::uint32_t h_max = *uniq.rbegin();
    const auto lam = liouville_sieve(limit + h_max);
    std::int64_t sum = 0;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        int prod = 1;
        for (std::uint32_t h : uniq) prod *= lam[n + h];
        sum += prod;
    }
    return sum;
}

}  // namespace arithseq
