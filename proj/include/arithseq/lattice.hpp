#pragma once

#include <cstdint>

#include "arithseq/bitvec.hpp"

namespace arithseq {

struct LatticeResult {
    std::size_t n = 0;
    std::uint32_t level = 0;  // greatest passing dimension, 0 if none
};

/// Whether the difference vectors (s_m - s_1, ..., s_{m+dim-1} - s_dim) for
/// m = 2..n-dim+1 span GF(2)^dim. Computed by packed-row Gaussian elimination.
bool passes_lattice_test(const BitVec& s, std::size_t n, std::uint32_t dim);

/// Greatest dimension passing the n-window lattice test, searched downward from
/// floor(n/2). n = 1 has no difference vectors and yields level 0.
LatticeResult lattice_level(const BitVec& s, std::size_t n);

}  // namespace arithseq
