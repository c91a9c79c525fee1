#include "arithseq/boolfun.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "arithseq/errors.hpp"
#include "arithseq/numtheory.hpp"

namespace arithseq {

namespace {

constexpr std::uint64_t kLevelMask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

int max_popcount_of_set_bits(const BitVec& v) {
    int best = 0;
    const auto words = v.words();
    for (std::size_t w = 0; w < words.size(); ++w) {
        for (std::uint64_t bits = words[w]; bits; bits &= bits - 1) {
            const std::uint64_t idx = (w << 6) + std::countr_zero(bits);
            best = std::max(best, std::popcount(idx));
        }
    }
    return best;
}

}  // namespace

int Anf::degree() const { return max_popcount_of_set_bits(coeffs); }

bool Anf::eval(std::uint64_t point) const {
    bool acc = coeffs.get(0);
    for (std::uint64_t sub = point; sub; sub = (sub - 1) & point) acc ^= coeffs.get(sub);
    return acc;
}

AnfStats anf_stats(const Anf& a) { return {a.degree(), a.sparsity()}; }

AnfStats complement_anf_stats(const Anf& a) {
    // Flipping the value at the all-zero input flips every ANF coefficient.
    BitVec flipped(a.coeffs.size());
    auto dst = flipped.words();
    const auto src = a.coeffs.words();
    for (std::size_t w = 0; w < src.size(); ++w) dst[w] = ~src[w];
    if (a.coeffs.size() & 63) dst.back() &= (~std::uint64_t{0}) >> (64 - (a.coeffs.size() & 63));
    Anf c{a.r, std::move(flipped)};
    return {c.degree(), c.sparsity()};
}

void moebius_in_place(std::span<std::uint64_t> words, int r) {
    const int in_word = std::min(r, 6);
    for (int lvl = 0; lvl < in_word; ++lvl)
        for (auto& w : words) w ^= (w & kLevelMask[lvl]) << (1u << lvl);
    for (int lvl = 6; lvl < r; ++lvl) {
        const std::size_t stride = std::size_t{1} << (lvl - 6);
        for (std::size_t base = 0; base < words.size(); base += 2 * stride)
            for (std::size_t j = 0; j < stride; ++j) words[base + stride + j] ^= words[base + j];
    }
}

TruthTable truth_table_from_fn(const ArithFn& fn, int r, bool c) {
    if (r < 1) throw std::invalid_argument("truth_table_from_fn: r must be >= 1");
    if (r > 24) throw CapacityError("truth_table_from_fn: capacity is r <= 24");
    if (fn.kind == ArithKind::legendre && (std::uint64_t{1} << r) > fn.p)
        throw std::invalid_argument(
            "truth_table_from_fn: 2^r exceeds p, indices would hit multiples of p");
    const std::size_t size = std::size_t{1} << r;
    BitSequence seq = generate_sequence(fn, size - 1);
    BitVec v(size);
    for (std::size_t n = 1; n < size; ++n) v.set(n, seq.s(n));
    v.set(0, c);
    return {r, std::move(v)};
}

int default_r(std::uint64_t p) {
    int r = 0;
    while ((std::uint64_t{1} << (r + 1)) <= p) ++r;
    return r;
}

Anf anf_from_table(const TruthTable& t) {
    Anf a{t.r, t.v};
    moebius_in_place(a.coeffs.words(), t.r);
    return a;
}

TruthTable table_from_anf(const Anf& a) {
    TruthTable t{a.r, a.coeffs};
    moebius_in_place(t.v.words(), a.r);
    return t;
}

Anf min_even_extremal(int r) {
    if (r < 1) throw std::invalid_argument("min_even_extremal: r must be >= 1");
    if (r > 24) throw CapacityError("min_even_extremal: capacity is r <= 24");
    Anf a{r, BitVec(std::size_t{1} << r)};
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask)
        if (std::countr_zero(mask) & 1) a.coeffs.set(mask);  // lowest variable index even
    return a;
}

Anf doubling_xor_anf(const TruthTable& t) {
    if (t.r < 1) throw std::invalid_argument("doubling_xor_anf: r must be >= 1");
    const int m = t.r - 1;
    const std::size_t half = std::size_t{1} << m;
    BitVec f(half == 0 ? 1 : half);
    for (std::size_t n = 1; n < half; ++n) {
        const bool differs = t.at(n) != t.at(2 * n);
        if (!differs) throw DoublingViolation(n);
        f.set(n, true);
    }
    Anf a{m, std::move(f)};
    moebius_in_place(a.coeffs.words(), m);
    return a;
}

NqrRestriction nqr_restriction_anf(const TruthTable& t, std::uint64_t p) {
    if (p % 8 != 1 && p % 8 != 7)
        throw std::invalid_argument("nqr_restriction_anf: requires p = 1 or 7 mod 8");
    const std::uint64_t q = least_qnr(p);
    int s = 0;
    while ((std::uint64_t{1} << s) < q) ++s;  // ceil(log2 q); q is odd so never a power of 2
    if (s > t.r)
        throw ConstructionOverflow("nqr_restriction_anf: least non-residue too large for r");
    const int m = t.r / s;
    const std::size_t points = std::size_t{1} << m;
    BitVec f(points);
    for (std::uint64_t nvec = 0; nvec < points; ++nvec) {
        std::uint64_t spread = 0;
        for (int i = 0; i < m; ++i)
            if ((nvec >> i) & 1) spread |= std::uint64_t{1} << (i * s);
        const std::uint64_t mult = q * spread;
        if (mult >= t.size())
            throw ConstructionOverflow("nqr_restriction_anf: point " + std::to_string(mult) +
                                       " does not fit in " + std::to_string(t.r) + " bits");
        f.set(nvec, t.at(spread) != t.at(mult));
    }
    Anf a{m, std::move(f)};
    moebius_in_place(a.coeffs.words(), m);
    return {m, s, q, std::move(a)};
}

ExhaustiveMeans exhaustive_expected_values(int r) {
    if (r < 1) throw std::invalid_argument("exhaustive_expected_values: r must be >= 1");
    if (r > 4)
        throw CapacityError("exhaustive_expected_values: capacity is r <= 4 (2^(2^r) functions)");
    const int table_bits = 1 << r;
    ExhaustiveMeans out;
    out.count = std::uint64_t{1} << table_bits;
    for (std::uint64_t tt = 0; tt < out.count; ++tt) {
        std::uint64_t anf[1] = {tt};
        moebius_in_place(std::span<std::uint64_t>(anf, 1), r);
        out.sparsity_sum += static_cast<std::uint64_t>(std::popcount(anf[0]));
        int deg = 0;
        for (std::uint64_t bits = anf[0]; bits; bits &= bits - 1)
            deg = std::max(deg, std::popcount(static_cast<std::uint64_t>(std::countr_zero(bits))));
        out.degree_sum += static_cast<std::uint64_t>(deg);
    }
    return out;
}

void write_anf(std::ostream& os, const Anf& a, bool c, const std::string& kind) {
    os << "r=" << a.r << " c=" << (c ? 1 : 0) << " kind=" << kind << '\n';
    char buf[32];
    for (std::uint64_t mask = 0; mask < a.coeffs.size(); ++mask) {
        if (!a.coeffs.get(mask)) continue;
        std::snprintf(buf, sizeof buf, "%llx 1\n", static_cast<unsigned long long>(mask));
        os << buf;
    }
}

}  // namespace arithseq
