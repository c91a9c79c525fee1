#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "arithseq/checks.hpp"

namespace arithseq {

struct ExperimentConfig {
    std::filesystem::path out_root = default_out_root();
    int jobs = 0;        // 0 = available parallelism
    bool force = false;  // recompute even when a valid cache entry exists

    /// $ARITHSEQ_RESULTS when set, otherwise ./results.
    static std::filesystem::path default_out_root();
};

/// Every experiment writes results/<name>/<param-hash>/{data.csv, plot.svg, meta.json}.
struct ExperimentFiles {
    std::filesystem::path dir, csv, svg, meta;
    bool from_cache = false;
    double runtime_seconds = 0;
};

// --- figure 1: ANF sparsity deviation of Legendre functions -----------------

struct PrimeAnfRow {
    std::uint32_t p = 0;
    int r = 0;
    int class_mod8 = 0;
    std::uint32_t nqr = 0;
    std::uint64_t spr_c0 = 0, spr_c1 = 0;
    int deg_c0 = 0, deg_c1 = 0;

    /// spr(B) - 2^(r-1) for c = 0; the absolute value is c-independent.
    std::int64_t dev() const {
        return static_cast<std::int64_t>(spr_c0) - (std::int64_t{1} << (r - 1));
    }
};

struct Figure1Result {
    ExperimentFiles files;
    std::vector<PrimeAnfRow> rows;
    std::int64_t max_abs_dev = 0;
    std::uint32_t argmax_p = 0;
    double max_ratio = 0;  // max |dev| / sqrt(p)
};
Figure1Result run_figure1(std::uint64_t p_max, const ExperimentConfig& cfg);

// --- figure 2: max profile deviation over p = 1, 7 mod 8 --------------------

struct Figure2Row {
    std::uint32_t p = 0;
    int r = 0;
    int class_mod8 = 0;
    std::int64_t max_dev2 = 0;  // max_N |2 L(L_p, N) - N| for N = 1..p+1
    std::uint32_t argmax_n = 0;
    std::uint32_t l_end = 0;      // L(L_p, p+1)
    std::uint32_t l_formula = 0;  // closed-form periodic value
};

struct Figure2Result {
    ExperimentFiles files;
    std::vector<Figure2Row> rows;
    std::int64_t max_dev2 = 0;
    std::uint32_t argmax_p = 0;
    double guide_c = 0;  // least-squares c for max-deviation ~ c log p (reported only)
};
Figure2Result run_figure2(std::uint64_t p_max, const ExperimentConfig& cfg);

// --- figure 3: full profile deviation curve for one large prime -------------

struct Figure3Result {
    ExperimentFiles files;
    std::uint32_t p = 0;
    std::vector<std::uint32_t> profile;  // L(L_p, N), N = 1..p+1
    std::uint64_t periodic_l = 0;
    std::size_t sign_changes = 0;  // sign changes of 2L - N over the curve
    std::int64_t max_dev2 = 0;
    std::size_t argmax_n = 0;
};
Figure3Result run_figure3(std::uint64_t p, const ExperimentConfig& cfg);

// --- least non-residue distribution ------------------------------------------

struct NqrDistRow {
    int k = 0;  // 0 marks the tail row
    std::uint32_t nqr = 0;
    std::uint64_t count = 0;
    double observed = 0;
    double predicted = 0;  // 1/2^k, tail = 1/2^10
};

struct NqrDistResult {
    ExperimentFiles files;
    std::vector<NqrDistRow> rows;
    std::uint64_t odd_primes = 0;
    double frac_nqr2 = 0;
    double frac_le17 = 0;
};
NqrDistResult run_nqr_distribution(std::uint64_t x, const ExperimentConfig& cfg);

// --- correlation report (report-only quantities) -----------------------------

struct CorrReportRow {
    std::uint32_t p = 0;
    std::int64_t c1 = 0, c2 = 0, c3 = -1;  // c3 = -1 when not computed
    int k_below_half = 0;                  // largest k with all C_j(L_p, p) < p/2
    std::uint32_t l_p = 0;                 // L(L_p, p)
    double ratio = 0;                      // L / (K log p)
};

struct CorrReportResult {
    ExperimentFiles files;
    std::vector<CorrReportRow> rows;
};
CorrReportResult run_corr_report(std::uint64_t p_max, std::uint64_t order3_p_max,
                                 const ExperimentConfig& cfg);

// --- verification suites ------------------------------------------------------

struct VerifyOptions {
    std::uint64_t p_max = 10000;        // ANF sweeps
    int r_max = 16;                     // Liouville ANF sweeps use r = 4..r_max
    std::uint64_t lc_exact_p_max = 2000;
    std::uint64_t band_p_max = 1000;    // Legendre profile band sweep
    std::size_t doubling_len = 100000;  // Liouville profile band length
    int carlitz_d_max = 20;
    int jobs = 0;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    nlohmann::json to_json() const;
};

/// Suite names accepted by run_verify_suite, with the claim each one checks.
const std::vector<std::pair<std::string, std::string>>& verify_suites();

VerifyReport run_verify_suite(const std::string& suite, const VerifyOptions& opt);

/// Runs every suite; all claims must pass at the default options.
VerifyReport verify_all(const VerifyOptions& opt);

}  // namespace arithseq
