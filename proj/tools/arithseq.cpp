#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "arithseq/boolfun.hpp"
#include "arithseq/correlation.hpp"
#include "arithseq/errors.hpp"
#include "arithseq/experiments.hpp"
#include "arithseq/lattice.hpp"
#include "arithseq/lincomplex.hpp"
#include "arithseq/numtheory.hpp"
#include "arithseq/sequence.hpp"
#include "arithseq/version.hpp"

namespace {

using namespace arithseq;

// exit codes: 0 success / all checks pass, 1 check failure, 2 usage error, 3 capacity error
constexpr int kOk = 0, kCheckFailure = 1, kUsageError = 2, kCapacityError = 3;

struct GenArgs {
    std::string kind;
    std::uint64_t p = 0;
    std::uint64_t length = 0;
    std::string format = "ascii";
    bool patched = false;
    std::string out;
};

ArithFn parse_kind(const std::string& kind, std::uint64_t p) {
    if (kind == "legendre") {
        if (p == 0) throw CLI::ValidationError("--p is required for --kind legendre");
        return ArithFn::legendre(p);
    }
    if (kind == "liouville-int") return ArithFn::liouville_int();
    if (kind == "liouville-f2") return ArithFn::liouville_f2();
    throw CLI::ValidationError("unknown kind: " + kind);
}

BitSequence make_sequence(const GenArgs& args) {
    if (args.patched) {
        if (args.kind != "legendre")
            throw CLI::ValidationError("--patched applies to --kind legendre only");
        return patched_legendre_sequence(args.p, args.length);
    }
    return generate_sequence(parse_kind(args.kind, args.p), args.length);
}

void emit(const std::string& out, const std::string& data, bool binary = false) {
    if (out.empty()) {
        std::cout << data;
    } else {
        std::ofstream os(out, binary ? std::ios::binary : std::ios::out);
        if (!os) throw std::runtime_error("cannot open for writing: " + out);
        os << data;
    }
}

std::vector<std::uint32_t> parse_shift_list(const std::string& csv) {
    std::vector<std::uint32_t> shifts;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) shifts.push_back(std::stoul(item));
    return shifts;
}

void print_report(const VerifyReport& report) {
    for (const auto& c : report.checks)
        std::cout << (c.pass ? "[ ok ] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"binary arithmetic function sequences: generation, ANF analysis,\n"
                 "linear complexity / lattice / correlation measures, and verification sweeps"};
    app.set_version_flag("--version", std::string(version()));
    app.require_subcommand(1);

    ExperimentConfig cfg;
    std::string out_dir = cfg.out_root.string();

    // ---- gen
    GenArgs gen;
    auto* cmd_gen = app.add_subcommand("gen", "Generate a sequence as ASCII 0/1 or a packed "
                                              "little-endian bit file with a length header");
    cmd_gen->add_option("--kind", gen.kind, "legendre | liouville-int | liouville-f2")
        ->required();
    cmd_gen->add_option("--p", gen.p, "odd prime modulus (legendre)");
    cmd_gen->add_option("--length", gen.length, "number of terms")->required();
    cmd_gen->add_option("--format", gen.format, "ascii | bits")
        ->check(CLI::IsMember({"ascii", "bits"}));
    cmd_gen->add_flag("--patched", gen.patched,
                      "patch multiples of 2p so s_{2n} = 1 - s_n holds everywhere "
                      "(legendre, p = 3,5 mod 8)");
    cmd_gen->add_option("--out", gen.out, "output file (default: stdout)");

    // ---- anf
    std::string anf_kind, anf_out;
    std::uint64_t anf_p = 0;
    int anf_r = 0, anf_c = 0;
    auto* cmd_anf = app.add_subcommand(
        "anf", "Truth table -> algebraic normal form; prints the set coefficients "
               "(header 'r=<r> c=<c> kind=<kind>', then one 'I(hex) 1' line each) plus "
               "degree and sparsity on stderr");
    cmd_anf->add_option("--kind", anf_kind, "legendre | liouville-int | liouville-f2")
        ->required();
    cmd_anf->add_option("--p", anf_p, "odd prime modulus (legendre)");
    cmd_anf->add_option("--r", anf_r, "variables (default floor(log2 p) for legendre)");
    cmd_anf->add_option("--c", anf_c, "value at the all-zero input")->check(CLI::Range(0, 1));
    cmd_anf->add_option("--out", anf_out, "output file (default: stdout)");

    // ---- lcprofile
    std::string lc_kind, lc_in, lc_out;
    std::uint64_t lc_p = 0, lc_nmax = 0, lc_length = 0;
    auto* cmd_lc = app.add_subcommand(
        "lcprofile", "Linear complexity profile L(S, N) for N = 1..N_max via packed "
                     "Berlekamp-Massey; CSV columns N, L, dev_x2 (= 2L - N)");
    cmd_lc->add_option("--kind", lc_kind, "legendre | liouville-int | liouville-f2");
    cmd_lc->add_option("--p", lc_p, "odd prime modulus (legendre)");
    cmd_lc->add_option("--in", lc_in, "read the sequence from an ASCII bit file instead");
    cmd_lc->add_option("--length", lc_length, "terms to generate (default N_max)");
    cmd_lc->add_option("--n-max", lc_nmax, "profile length")->required();
    cmd_lc->add_option("--out", lc_out, "output file (default: stdout)");

    // ---- lattice
    std::string lat_kind, lat_in;
    std::uint64_t lat_p = 0, lat_n = 0;
    auto* cmd_lat = app.add_subcommand(
        "lattice", "Greatest dimension passing the N-window lattice test "
                   "(difference vectors spanning GF(2)^S), via packed GF(2) rank");
    cmd_lat->add_option("--kind", lat_kind, "legendre | liouville-int | liouville-f2");
    cmd_lat->add_option("--p", lat_p, "odd prime modulus (legendre)");
    cmd_lat->add_option("--in", lat_in, "read the sequence from an ASCII bit file instead");
    cmd_lat->add_option("--n", lat_n, "window length")->required();

    // ---- corr
    std::string corr_kind, corr_in, corr_shifts;
    std::uint64_t corr_p = 0, corr_n = 0, corr_caps = CorrelationQuery{}.caps;
    std::uint64_t corr_pmax = 0, corr_p3max = 150;
    int corr_k = 2;
    auto* cmd_corr = app.add_subcommand(
        "corr", "Correlation measure C_k(S, N): max over windows M and shift vectors D of "
                "|sum (-1)^(s_{n+d_1}+...+s_{n+d_k})|. With --shifts only M is maximized. "
                "--report emits per-prime C_1..C_3 and L/(K log N) for Legendre sequences");
    cmd_corr->add_option("--kind", corr_kind, "legendre | liouville-int | liouville-f2");
    cmd_corr->add_option("--p", corr_p, "odd prime modulus (legendre)");
    cmd_corr->add_option("--in", corr_in, "read the sequence from an ASCII bit file instead");
    cmd_corr->add_option("--k", corr_k, "order (default 2)");
    cmd_corr->add_option("--n", corr_n, "window length");
    cmd_corr->add_option("--caps", corr_caps, "max (M, D) pairs before a capacity error");
    cmd_corr->add_option("--shifts", corr_shifts, "fixed shift vector d1,d2,...");
    cmd_corr->add_option("--report", corr_pmax,
                         "emit the Legendre correlation report for odd primes p < this bound");
    cmd_corr->add_option("--report-order3-max", corr_p3max,
                         "largest p for which the report includes C_3 (default 150)");

    // ---- verify
    std::string verify_suite = "all", verify_out;
    VerifyOptions vopt;
    auto* cmd_verify = app.add_subcommand(
        "verify", "Run verification sweeps; exits nonzero if any claim fails");
    std::string suite_help = "all";
    for (const auto& [name, claim] : verify_suites()) suite_help += " | " + name;
    cmd_verify->add_option("--suite", verify_suite, suite_help);
    cmd_verify->add_option("--p-max", vopt.p_max, "prime bound for ANF sweeps (default 10000)");
    cmd_verify->add_option("--r-max", vopt.r_max, "largest r for Liouville sweeps (default 16)");
    cmd_verify->add_option("--lc-exact-p-max", vopt.lc_exact_p_max,
                           "prime bound for the exact-complexity sweep (default 2000)");
    cmd_verify->add_option("--band-p-max", vopt.band_p_max,
                           "prime bound for the Legendre band sweep (default 1000)");
    cmd_verify->add_option("--doubling-len", vopt.doubling_len,
                           "Liouville profile length (default 100000)");
    cmd_verify->add_option("--carlitz-d-max", vopt.carlitz_d_max,
                           "largest degree for the balance identity (default 20)");
    cmd_verify->add_option("--jobs", vopt.jobs, "worker threads (default: all cores)");
    cmd_verify->add_option("--out", verify_out, "write the JSON report here");
    cmd_verify->footer("Suites and the claims they check:\n" + [] {
        std::string s;
        for (const auto& [name, claim] : verify_suites()) s += "  " + name + ": " + claim + "\n";
        return s;
    }());

    // ---- figure
    int fig_id = 0;
    std::uint64_t fig_pmax = 10000, fig_p = 100049;
    auto* cmd_fig = app.add_subcommand(
        "figure", "Regenerate an experiment figure under <out-dir>/figure<id>/<param-hash>/"
                  "{data.csv, plot.svg, meta.json}");
    cmd_fig->add_option("--id", fig_id, "1: ANF sparsity deviation scatter; 2: max profile "
                                        "deviation scatter; 3: full profile deviation curve")
        ->required()
        ->check(CLI::Range(1, 3));
    cmd_fig->add_option("--p-max", fig_pmax, "prime bound for figures 1-2 (default 10000)");
    cmd_fig->add_option("--p", fig_p, "prime for figure 3 (default 100049)");

    // ---- nqr-dist
    std::uint64_t nqr_x = 1000000;
    auto* cmd_nqr = app.add_subcommand(
        "nqr-dist", "Distribution of the least quadratic non-residue over primes <= x "
                    "against the predicted 1/2^k");
    cmd_nqr->add_option("--x", nqr_x, "prime bound (default 10^6)");

    for (auto* cmd : {cmd_fig, cmd_nqr}) {
        cmd->add_option("--out-dir", out_dir,
                        "results directory (default: $ARITHSEQ_RESULTS or ./results)");
        cmd->add_option("--jobs", cfg.jobs, "worker threads (default: all cores)");
        cmd->add_flag("--force", cfg.force, "recompute even when cached results are valid");
    }
    cmd_corr->add_option("--out-dir", out_dir,
                         "results directory for --report (default: $ARITHSEQ_RESULTS or "
                         "./results)");
    cmd_corr->add_option("--jobs", cfg.jobs, "worker threads for --report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }
    cfg.out_root = out_dir;

    if (cmd_gen->parsed()) {
        const BitSequence seq = make_sequence(gen);
        if (gen.format == "ascii") {
            std::ostringstream os;
            write_ascii(os, seq.bits);
            emit(gen.out, os.str());
        } else {
            if (gen.out.empty())
                throw CLI::ValidationError("--format bits requires --out (binary data)");
            save_bits(gen.out, seq.bits, false);
        }
        return kOk;
    }

    if (cmd_anf->parsed()) {
        const ArithFn fn = parse_kind(anf_kind, anf_p);
        if (anf_r == 0) {
            if (fn.kind != ArithKind::legendre)
                throw CLI::ValidationError("--r is required for Liouville kinds");
            anf_r = default_r(anf_p);
        }
        const TruthTable t = truth_table_from_fn(fn, anf_r, anf_c != 0);
        const Anf a = anf_from_table(t);
        std::ostringstream os;
        write_anf(os, a, anf_c != 0, fn.name());
        emit(anf_out, os.str());
        std::cerr << "deg=" << a.degree() << " spr=" << a.sparsity() << "\n";
        return kOk;
    }

    auto load_or_generate = [&](const std::string& kind, std::uint64_t p,
                                const std::string& file, std::uint64_t length) -> BitVec {
        if (!file.empty()) return load_bits(file, true);
        if (kind.empty())
            throw CLI::ValidationError("either --kind or --in is required");
        return generate_sequence(parse_kind(kind, p), length).bits;
    };

    if (cmd_lc->parsed()) {
        const BitVec bits =
            load_or_generate(lc_kind, lc_p, lc_in, lc_length ? lc_length : lc_nmax);
        const LCProfile prof = bm_profile(bits, lc_nmax);
        std::string csv = "N,L,dev_x2\n";
        char buf[80];
        for (std::size_t n = 1; n <= prof.values.size(); ++n) {
            std::snprintf(buf, sizeof buf, "%zu,%u,%lld\n", n, prof.values[n - 1],
                          2ll * prof.values[n - 1] - static_cast<long long>(n));
            csv += buf;
        }
        emit(lc_out, csv);
        std::cerr << "final L = " << prof.final_l() << ", max |L - N/2| = " << prof.max_dev()
                  << " at N = " << prof.argmax_n << "\n";
        return kOk;
    }

    if (cmd_lat->parsed()) {
        const BitVec bits = load_or_generate(lat_kind, lat_p, lat_in, lat_n);
        const LatticeResult res = lattice_level(bits, lat_n);
        std::cout << res.level << "\n";
        return kOk;
    }

    if (cmd_corr->parsed()) {
        if (corr_pmax > 0) {
            const CorrReportResult res = run_corr_report(corr_pmax, corr_p3max, cfg);
            std::cerr << "wrote " << res.files.csv.string() << "\n";
            return kOk;
        }
        if (corr_n == 0) throw CLI::ValidationError("--n is required");
        CorrelationQuery query;
        query.k = corr_k;
        query.n = corr_n;
        query.caps = corr_caps;
        if (!corr_shifts.empty()) query.shifts = parse_shift_list(corr_shifts);
        const BitVec bits = load_or_generate(corr_kind, corr_p, corr_in, corr_n);
        const CorrelationResult res = correlation_measure(bits, query);
        std::cout << res.value << "\n";
        std::cerr << "pairs=" << res.pairs << " best_m=" << res.best_m << " best_shifts=";
        for (std::size_t i = 0; i < res.best_shifts.size(); ++i)
            std::cerr << (i ? "," : "") << res.best_shifts[i];
        std::cerr << "\n";
        return kOk;
    }

    if (cmd_verify->parsed()) {
        const VerifyReport report =
            verify_suite == "all" ? verify_all(vopt) : run_verify_suite(verify_suite, vopt);
        print_report(report);
        if (!verify_out.empty()) {
            std::ofstream os(verify_out);
            os << report.to_json().dump(2) << "\n";
        }
        return report.all_pass() ? kOk : kCheckFailure;
    }

    if (cmd_fig->parsed()) {
        if (fig_id == 1) {
            const auto res = run_figure1(fig_pmax, cfg);
            std::cerr << "rows=" << res.rows.size() << " max |spr dev| = " << res.max_abs_dev
                      << " at p = " << res.argmax_p
                      << ", max |dev|/sqrt(p) = " << res.max_ratio
                      << (res.files.from_cache ? " (cached)" : "") << "\n";
            std::cout << res.files.csv.string() << "\n";
        } else if (fig_id == 2) {
            const auto res = run_figure2(fig_pmax, cfg);
            std::cerr << "rows=" << res.rows.size() << " max |L - N/2| = "
                      << res.max_dev2 / 2.0 << " at p = " << res.argmax_p
                      << ", guide c = " << res.guide_c
                      << (res.files.from_cache ? " (cached)" : "") << "\n";
            std::cout << res.files.csv.string() << "\n";
        } else {
            if (fig_p % 8 == 3 || fig_p % 8 == 5)
                std::cerr << "note: p = 3,5 mod 8 keeps the curve inside [-1, 1]\n";
            const auto res = run_figure3(fig_p, cfg);
            std::cerr << "periodic L = " << res.periodic_l
                      << ", max |L - N/2| = " << res.max_dev2 / 2.0 << " at N = " << res.argmax_n
                      << ", sign changes = " << res.sign_changes
                      << (res.files.from_cache ? " (cached)" : "") << "\n";
            std::cout << res.files.csv.string() << "\n";
        }
        return kOk;
    }

    if (cmd_nqr->parsed()) {
        const auto res = run_nqr_distribution(nqr_x, cfg);
        for (const auto& row : res.rows) {
            char buf[120];
            if (row.k > 0)
                std::snprintf(buf, sizeof buf, "k=%2d  N(p)=%3u  count=%8llu  obs=%.6f  pred=%.6f",
                              row.k, row.nqr, static_cast<unsigned long long>(row.count),
                              row.observed, row.predicted);
            else
                std::snprintf(buf, sizeof buf, "tail         count=%8llu  obs=%.6f  pred=%.6f",
                              static_cast<unsigned long long>(row.count), row.observed,
                              row.predicted);
            std::cout << buf << "\n";
        }
        std::cout << "fraction with N(p) = 2: " << res.frac_nqr2
                  << "   fraction with N(p) <= 17: " << res.frac_le17 << " (limit 127/128 = "
                  << 127.0 / 128.0 << ")\n";
        std::cerr << "wrote " << res.files.csv.string() << "\n";
        return kOk;
    }

    return kUsageError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const BudgetError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kCapacityError;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kCapacityError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailure;
    }
}
