#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "arithseq/bitvec.hpp"

namespace arithseq {

enum class ArithKind { legendre, liouville_int, liouville_f2 };

/// One of the three binary arithmetic functions under study.
struct ArithFn {
    ArithKind kind;
    std::uint64_t p = 0;  // modulus, Legendre only

    /// Legendre function for an odd prime modulus. Throws std::invalid_argument otherwise.
    static ArithFn legendre(std::uint64_t p);
    static ArithFn liouville_int() { return {ArithKind::liouville_int, 0}; }
    static ArithFn liouville_f2() { return {ArithKind::liouville_f2, 0}; }

    std::string name() const;

    friend bool operator==(const ArithFn&, const ArithFn&) = default;
};

/// Parses "legendre-<p>", "liouville-int" or "liouville-f2".
ArithFn arith_fn_from_name(const std::string& name);

/// Binary sequence s_1, s_2, ... with its generator recorded. Storage is 0-based,
/// accessors are 1-based to match the indexing used throughout.
struct BitSequence {
    BitVec bits;
    std::string origin;

    std::size_t length() const { return bits.size(); }
    bool s(std::uint64_t n) const { return bits.get(n - 1); }
};

/// Sequence identified with f via f(n) = (-1)^{s_n}, n = 1..length.
/// For the Legendre kind, s_n = 0 at multiples of p.
BitSequence generate_sequence(const ArithFn& fn, std::size_t length);

/// Legendre sequence for p = 3 or 5 mod 8 with the terms at multiples of 2p
/// replaced so that s_{2n} = 1 - s_n holds at every index. Agrees with the plain
/// Legendre sequence on the first 2p - 1 terms.
BitSequence patched_legendre_sequence(std::uint64_t p, std::size_t length);

/// ASCII form: one line of '0'/'1' characters.
void write_ascii(std::ostream& os, const BitVec& bits);
BitVec read_ascii(std::istream& is);

/// Raw form: a little-endian 64-bit bit-count header followed by the packed
/// little-endian 64-bit words.
void write_raw(std::ostream& os, const BitVec& bits);
BitVec read_raw(std::istream& is);

void save_bits(const std::filesystem::path& path, const BitVec& bits, bool ascii);
BitVec load_bits(const std::filesystem::path& path, bool ascii);

}  // namespace arithseq
