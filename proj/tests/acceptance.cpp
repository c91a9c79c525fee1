// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "arithseq/boolfun.hpp"
#include "arithseq/checks.hpp"
#include "arithseq/correlation.hpp"
#include "arithseq/experiments.hpp"
#include "arithseq/f2poly.hpp"
#include "arithseq/lattice.hpp"
#include "arithseq/lincomplex.hpp"
#include "arithseq/numtheory.hpp"
#include "arithseq/sequence.hpp"
#include "oracles.hpp"
#include "pins.hpp"

using namespace arithseq;

namespace {

struct Harness {
    int failures = 0;

    template <typename Fn>
    void criterion(const std::string& id, const std::string& what, double budget_s, Fn&& fn) {
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            fn(error);
        } catch (const std::exception& e) {
            error = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (error.empty() && budget_s > 0 && elapsed > budget_s)
            error = "runtime " + std::to_string(elapsed) + "s exceeds budget " +
                    std::to_string(budget_s) + "s";
        if (error.empty()) {
            std::printf("[PASS] %s: %s (%.1fs)\n", id.c_str(), what.c_str(), elapsed);
        } else {
            std::printf("[FAIL] %s: %s (%.1fs) -- %s\n", id.c_str(), what.c_str(), elapsed,
                        error.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
};

#define EXPECT(cond, msg)             \
    do {                              \
        if (!(cond)) {                \
            error = (msg);            \
            return;                   \
        }                             \
    } while (0)

std::string s64(std::int64_t v) { return std::to_string(v); }

}  // namespace

int main() {
    Harness h;
    VerifyOptions opt;  // defaults: p_max 10^4, r_max 16, lc-exact < 2000, band < 1000
    opt.jobs = 0;
    ExperimentConfig cfg;
    cfg.out_root = "acceptance_results";
    cfg.jobs = 0;

    // 1. exact periodic linear complexity, every odd prime p < 2000
    h.criterion("C1", "exact periodic linear complexity for p < 2000", 30, [&](std::string& error) {
        const VerifyReport rep = run_verify_suite("lc-exact", opt);
        for (const auto& c : rep.checks) EXPECT(c.pass, c.name + ": " + c.detail);
    });

    // 2. two-sided profile band for p = 3,5 mod 8, p < 1000, N = 1..2p+5
    h.criterion("C2", "legendre profile band for p = 3,5 mod 8, p < 1000", 60,
                [&](std::string& error) {
                    const VerifyReport rep = run_verify_suite("lc-band-legendre", opt);
                    for (const auto& c : rep.checks) EXPECT(c.pass, c.name + ": " + c.detail);
                });

    // 3. doubling-rule band for both Liouville sequences of length 10^5
    h.criterion("C3", "liouville profiles inside [floor(N/2), floor(N/2)+1], length 10^5", 30,
                [&](std::string& error) {
                    const VerifyReport rep = run_verify_suite("lc-band", opt);
                    for (const auto& c : rep.checks) EXPECT(c.pass, c.name + ": " + c.detail);
                });

    // 4. degree/sparsity bounds: Liouville r = 4..16 and Legendre p = 3,5 mod 8 < 10^4
    h.criterion("C4", "deg >= r-1 and spr >= floor(2^r/3) (>= floor(p/6) for legendre)", 60,
                [&](std::string& error) {
                    for (const char* suite : {"anf-bounds", "anf-bounds-legendre"}) {
                        const VerifyReport rep = run_verify_suite(suite, opt);
                        for (const auto& c : rep.checks) EXPECT(c.pass, c.name + ": " + c.detail);
                    }
                });

    // 4x. The literal strict form floor(2^r/3) > floor(p/6) is false: the floors tie at
    // exactly five primes below 10^4. The expected failure set is pinned; any deviation
    // (including the strict form ever passing) fails this criterion.
    h.criterion("C4-strict", "strict floor chain fails exactly at p = 3, 13, 61, 1021, 4093",
                0, [&](std::string& error) {
                    std::vector<std::uint32_t> observed_ties;
                    for (std::uint32_t p : sieve_primes(9999)) {
                        if (p % 8 != 3 && p % 8 != 5) continue;
                        const int r = default_r(p);
                        const std::uint64_t lhs = (std::uint64_t{1} << r) / 3;
                        const std::uint64_t rhs = p / 6;
                        EXPECT(lhs >= rhs, "floor(2^r/3) < floor(p/6) at p = " +
                                               std::to_string(p));
                        if (lhs == rhs) observed_ties.push_back(p);
                    }
                    const std::vector<std::uint32_t> pinned = {3, 13, 61, 1021, 4093};
                    EXPECT(observed_ties == pinned,
                           "floor ties drifted from the pinned set (" +
                               std::to_string(observed_ties.size()) + " found)");
                    std::printf("       strict floor chain is an expected failure at the "
                                "5 pinned tie primes; non-strict form holds everywhere\n");
                });

    // 5. least-non-residue restriction bounds for p = 1,7 mod 8, p < 10^4
    h.criterion("C5", "deg >= floor(r/s) and spr >= 2^(floor(r/s)-1) for p = 1,7 mod 8", 120,
                [&](std::string& error) {
                    const VerifyReport rep = run_verify_suite("nqr-restriction", opt);
                    for (const auto& c : rep.checks) EXPECT(c.pass, c.name + ": " + c.detail);
                });

    // 6. min over c of deg >= r-2 across all 1228 odd primes below 10^4
    h.criterion("C6", "deg >= r-2 (min over c) for all odd p < 10^4", 0, [&](std::string& error) {
        const auto primes = sieve_primes(9999);
        EXPECT(primes.size() - 1 == 1228, "expected 1228 odd primes, got " +
                                              std::to_string(primes.size() - 1));
        const VerifyReport rep = run_verify_suite("deg-margin", opt);
        for (const auto& c : rep.checks) EXPECT(c.pass, c.name + ": " + c.detail);
    });

    // 7. signed degree-d balance identity, d = 1..20
    h.criterion("C7", "carlitz sums equal (-1)^d 2^floor((d+1)/2) for d = 1..20", 0,
                [&](std::string& error) {
                    // recorded pattern: positive at even d, negative at odd d
                    const F2LiouvilleSieve sieve((std::uint64_t{1} << 21) - 1);
                    for (int d = 1; d <= 20; ++d) {
                        const std::int64_t magnitude = std::int64_t{1} << ((d + 1) / 2);
                        const std::int64_t expect = d % 2 ? -magnitude : magnitude;
                        const std::int64_t got = sieve.carlitz_sum(d);
                        EXPECT(got == expect, "d=" + std::to_string(d) + ": " + s64(got) +
                                                  " != " + s64(expect));
                    }
                    const VerifyReport rep = run_verify_suite("carlitz", opt);
                    for (const auto& c : rep.checks) EXPECT(c.pass, c.name + ": " + c.detail);
                });

    // 8. exhaustive expected-value oracles
    h.criterion("C8", "exhaustive means: sparsity, degree (r <= 4) and L (N <= 14)", 0,
                [&](std::string& error) {
                    for (int r = 1; r <= 4; ++r) {
                        const ExhaustiveMeans m = exhaustive_expected_values(r);
                        EXPECT(m.sparsity_sum == m.count * (std::uint64_t{1} << (r - 1)),
                               "mean sparsity != 2^(r-1) at r = " + std::to_string(r));
                        EXPECT(m.degree_sum == oracles::degree_sum_closed_form(r),
                               "mean degree != closed form at r = " + std::to_string(r));
                        // mean degree >= r - 5/8, as exact rationals
                        EXPECT(8 * m.degree_sum >= (8 * static_cast<std::uint64_t>(r) - 5) * m.count,
                               "mean degree below r - 5/8 at r = " + std::to_string(r));
                    }
                    const ExhaustiveMeans m2 = exhaustive_expected_values(2);
                    EXPECT(m2.degree_sum == 22 && m2.count == 16, "r=2 mean degree != 22/16");

                    for (std::size_t len = 1; len <= 14; ++len) {
                        std::uint64_t sum = 0;
                        for (std::uint64_t word = 0; word < (std::uint64_t{1} << len); ++word) {
                            BitVec bits(len);
                            for (std::size_t i = 0; i < len; ++i) bits.set(i, (word >> i) & 1);
                            sum += bm_profile(bits, len).final_l();
                        }
                        EXPECT(sum == pins::kLcSumByLength[len],
                               "sum of L over length " + std::to_string(len) + " = " +
                                   std::to_string(sum) + ", pinned " +
                                   std::to_string(pins::kLcSumByLength[len]));
                        // |mean - N/2| < 1  <=>  |2 sum - N 2^N| < 2^(N+1)
                        const std::int64_t diff = 2 * static_cast<std::int64_t>(sum) -
                                                  static_cast<std::int64_t>(len)
                                                      * (std::int64_t{1} << len);
                        EXPECT(std::abs(diff) < (std::int64_t{2} << len),
                               "|mean L - N/2| >= 1 at N = " + std::to_string(len));
                    }
                });

    // 9. lattice level vs linear complexity, independent code paths
    h.criterion(
        "C9", "lattice/complexity consistency (10^4 random) and maximal levels (10^3 doubling)",
        0, [&](std::string& error) {
            std::mt19937_64 rng(2024);
            for (int trial = 0; trial < 10000; ++trial) {
                const std::size_t n = 1 + rng() % 64;
                const BitVec bits = oracles::random_bits(n, rng);
                const std::uint32_t level = lattice_level(bits, n).level;
                const std::uint32_t l = bm_profile(bits, n).final_l();
                const std::uint32_t m =
                    std::min<std::uint32_t>(l, static_cast<std::uint32_t>(n) + 1 - l);
                EXPECT(level == m || level + 1 == m,
                       "trial " + std::to_string(trial) + ": level " + std::to_string(level) +
                           " vs min{L, N+1-L} " + std::to_string(m));
            }
            for (int trial = 0; trial < 1000; ++trial) {
                const std::size_t n = 2 + rng() % 199;
                const BitVec bits = oracles::random_doubling_bits(n, rng);
                const std::uint32_t level = lattice_level(bits, n).level;
                EXPECT(level == n / 2, "doubling trial " + std::to_string(trial) + ": level " +
                                           std::to_string(level) + " != " +
                                           std::to_string(n / 2));
            }
        });

    // 10. figures
    h.criterion("C10a", "figure 1: 1228 rows, c-independent deviation, pinned extremes", 300,
                [&](std::string& error) {
                    const Figure1Result res = run_figure1(10000, cfg);
                    EXPECT(res.rows.size() == 1228,
                           "rows = " + std::to_string(res.rows.size()));
                    for (const auto& row : res.rows) {
                        const std::int64_t half = std::int64_t{1} << (row.r - 1);
                        const std::int64_t d0 = static_cast<std::int64_t>(row.spr_c0) - half;
                        const std::int64_t d1 = static_cast<std::int64_t>(row.spr_c1) - half;
                        EXPECT(std::abs(d0) == std::abs(d1),
                               "p=" + std::to_string(row.p) + ": |dev| differs between c");
                    }
                    EXPECT(res.max_abs_dev == pins::kFig1MaxAbsDev,
                           "max |spr dev| = " + s64(res.max_abs_dev) + ", pinned " +
                               s64(pins::kFig1MaxAbsDev));
                    EXPECT(res.argmax_p == pins::kFig1ArgmaxP,
                           "argmax p = " + std::to_string(res.argmax_p));
                    std::printf("       figure1: max |spr - 2^(r-1)| = %lld at p = %u, "
                                "max ratio/sqrt(p) = %.4f\n",
                                static_cast<long long>(res.max_abs_dev), res.argmax_p,
                                res.max_ratio);
                });

    h.criterion("C10b", "figure 2: sweep < 5 min, endpoints equal the closed form", 300,
                [&](std::string& error) {
                    const Figure2Result res = run_figure2(10000, cfg);
                    for (const auto& row : res.rows)
                        EXPECT(row.l_end == row.l_formula,
                               "p=" + std::to_string(row.p) + ": endpoint " +
                                   std::to_string(row.l_end) + " != formula " +
                                   std::to_string(row.l_formula));
                    EXPECT(res.max_dev2 == pins::kFig2MaxDev2,
                           "max dev2 = " + s64(res.max_dev2) + ", pinned " +
                               s64(pins::kFig2MaxDev2));
                    EXPECT(res.argmax_p == pins::kFig2ArgmaxP,
                           "argmax p = " + std::to_string(res.argmax_p));
                    std::printf("       figure2: max |L - N/2| = %.1f at p = %u, guide c = "
                                "%.4f (max dev ~ c log p)\n",
                                res.max_dev2 / 2.0, res.argmax_p, res.guide_c);
                });

    h.criterion("C10c", "figure 3: p = 100049 profile < 5 min, periodic L = 50024", 300,
                [&](std::string& error) {
                    const Figure3Result res = run_figure3(100049, cfg);
                    EXPECT(res.periodic_l == 50024,
                           "periodic L = " + std::to_string(res.periodic_l));
                    EXPECT(res.profile.size() == 100050,
                           "profile rows = " + std::to_string(res.profile.size()));
                    EXPECT(res.sign_changes >= 1, "deviation never changes sign");
                    EXPECT(res.sign_changes == pins::kFig3SignChanges,
                           "sign changes = " + std::to_string(res.sign_changes) + ", pinned " +
                               std::to_string(pins::kFig3SignChanges));
                    EXPECT(res.max_dev2 == pins::kFig3MaxDev2,
                           "max dev2 = " + s64(res.max_dev2) + ", pinned " +
                               s64(pins::kFig3MaxDev2));
                    std::printf("       figure3: max |L - N/2| = %.1f at N = %zu, "
                                "sign changes = %zu\n",
                                res.max_dev2 / 2.0, res.argmax_n, res.sign_changes);
                });

    // 11. least non-residue distribution at x = 10^6
    h.criterion("C11", "N(p) = 2 within 0.01 of 1/2 at x = 10^6; N(p) <= 17 reported", 60,
                [&](std::string& error) {
                    const NqrDistResult res = run_nqr_distribution(1000000, cfg);
                    EXPECT(std::abs(res.frac_nqr2 - 0.5) <= 0.01,
                           "fraction with N(p) = 2 is " + std::to_string(res.frac_nqr2));
                    double total = 0;
                    for (const auto& row : res.rows) total += row.observed;
                    EXPECT(std::abs(total - 1.0) < 1e-9, "fractions sum to " +
                                                             std::to_string(total));
                    std::printf("       nqr-dist: N(p)=2 fraction %.6f; N(p)<=17 fraction "
                                "%.6f vs limit %.6f\n",
                                res.frac_nqr2, res.frac_le17, 127.0 / 128.0);
                });

    if (h.failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", h.failures);
    return 1;
}
