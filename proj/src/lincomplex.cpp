#include "arithseq/lincomplex.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace arithseq {

namespace {

// c ^= b << k over the first nb words of b.
inline void xor_shifted(std::vector<std::uint64_t>& c, const std::vector<std::uint64_t>& b,
                        std::size_t nb, std::size_t k) {
    const std::size_t off = k >> 6;
    const unsigned sh = k & 63;
    if (sh == 0) {
        for (std::size_t i = 0; i < nb; ++i) c[i + off] ^= b[i];
    } else {
        for (std::size_t i = 0; i < nb; ++i) {
            const std::uint64_t w = b[i];
            c[i + off] ^= w << sh;
            if (w >> (64 - sh)) c[i + off + 1] ^= w >> (64 - sh);
        }
    }
}

}  // namespace

LCProfile bm_profile(const BitVec& s, std::size_t n_max) {
    if (n_max > s.size())
        throw std::invalid_argument("bm_profile: n_max exceeds the sequence length");
    LCProfile out;
    out.values.reserve(n_max);
    if (n_max == 0) return out;

    const std::size_t nw = (n_max >> 6) + 4;
    std::vector<std::uint64_t> rev(nw, 0);  // bit i = s at offset t - i while processing term t
    std::vector<std::uint64_t> conn(nw, 0), prev(nw, 0), saved(nw, 0);
    conn[0] = prev[0] = 1;
    std::size_t prev_words = 1;
    std::uint32_t L = 0;
    std::size_t gap = 1;  // steps since the last length change

    for (std::size_t t = 0; t < n_max; ++t) {
        const std::size_t active = (t >> 6) + 1;
        // rev <<= 1, then insert the new term at bit 0.
        for (std::size_t i = active; i-- > 1;) rev[i] = (rev[i] << 1) | (rev[i - 1] >> 63);
        rev[0] = (rev[0] << 1) | static_cast<std::uint64_t>(s.get(t));

        const std::size_t cw = (L >> 6) + 1;  // words holding the L+1 connection bits
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < cw; ++i) acc ^= conn[i] & rev[i];
        if (std::popcount(acc) & 1) {
            if (2 * L <= t) {
                for (std::size_t i = 0; i < cw; ++i) saved[i] = conn[i];
                xor_shifted(conn, prev, prev_words, gap);
                for (std::size_t i = 0; i < cw; ++i) prev[i] = saved[i];
                for (std::size_t i = cw; i < prev_words; ++i) prev[i] = 0;
                prev_words = cw;
                L = static_cast<std::uint32_t>(t + 1) - L;
                gap = 1;
            } else {
                xor_shifted(conn, prev, prev_words, gap);
                ++gap;
            }
        } else {
            ++gap;
        }

        out.values.push_back(L);
        const std::int64_t dev2 =
            std::abs(2 * static_cast<std::int64_t>(L) - static_cast<std::int64_t>(t + 1));
        if (dev2 > out.max_dev2) {
            out.max_dev2 = dev2;
            out.argmax_n = t + 1;
        }
    }

    out.connection.assign(conn.begin(), conn.begin() + (out.values.back() >> 6) + 1);
    return out;
}

std::uint32_t linear_complexity_periodic(const BitVec& s, std::size_t period) {
    if (period == 0) throw std::invalid_argument("linear_complexity_periodic: period must be > 0");
    if (s.size() < 2 * period)
        throw std::invalid_argument(
            "linear_complexity_periodic: need at least 2*period terms, have " +
            std::to_string(s.size()));
    return bm_profile(s, 2 * period).final_l();
}

}  // namespace arithseq
