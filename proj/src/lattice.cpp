#include "arithseq/lattice.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace arithseq {

bool passes_lattice_test(const BitVec& s, std::size_t n, std::uint32_t dim) {
    if (n > s.size()) throw std::invalid_argument("passes_lattice_test: window exceeds sequence");
    if (dim == 0) throw std::invalid_argument("passes_lattice_test: dimension must be >= 1");
    if (n < dim + 1) return false;  // no vectors at all
    const std::size_t row_words = (dim + 63) / 64;
    const std::size_t rows = n - dim;  // m = 2 .. n - dim + 1

    // pivots[b] holds a reduced row whose leading (highest) set bit is b.
    std::vector<std::vector<std::uint64_t>> pivots(dim);
    std::uint32_t rank = 0;
    std::vector<std::uint64_t> row(row_words);

    for (std::size_t m = 2; m <= rows + 1; ++m) {
        for (auto& w : row) w = 0;
        for (std::uint32_t j = 0; j < dim; ++j)
            if (s.get(m + j - 1) != s.get(j)) row[j >> 6] |= std::uint64_t{1} << (j & 63);
        while (true) {
            int lead = -1;
            for (std::size_t w = row_words; w-- > 0;)
                if (row[w]) {
                    lead = static_cast<int>((w << 6) + 63 - std::countl_zero(row[w]));
                    break;
                }
            if (lead < 0) break;
            if (pivots[lead].empty()) {
                pivots[lead] = row;
                if (++rank == dim) return true;
                break;
            }
            for (std::size_t w = 0; w < row_words; ++w) row[w] ^= pivots[lead][w];
        }
    }
    return false;
}

LatticeResult lattice_level(const BitVec& s, std::size_t n) {
    if (n > s.size()) throw std::invalid_argument("lattice_level: window exceeds sequence");
    for (std::uint32_t dim = static_cast<std::uint32_t>(n / 2); dim >= 1; --dim)
        if (passes_lattice_test(s, n, dim)) return {n, dim};
    return {n, 0};
}

}  // namespace arithseq
