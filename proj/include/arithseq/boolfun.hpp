#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "arithseq/bitvec.hpp"
#include "arithseq/sequence.hpp"

namespace arithseq {

/// Truth table of a Boolean function in r variables: entry at index
/// n = sum n_j 2^(j-1) holds B(n_1, ..., n_r).
struct TruthTable {
    int r = 0;
    BitVec v;

    std::size_t size() const { return std::size_t{1} << r; }
    bool at(std::uint64_t n) const { return v.get(n); }
};

/// Algebraic normal form: coefficient a_I at the subset bitmask I.
struct Anf {
    int r = 0;
    BitVec coeffs;

    /// Largest |I| with a_I = 1; 0 for the zero function.
    int degree() const;

    /// Number of nonzero coefficients.
    std::size_t sparsity() const { return coeffs.count(); }

    /// Evaluate at a point (XOR of coefficients over submasks of the point).
    bool eval(std::uint64_t point) const;
};

/// Degree and sparsity of an ANF and of the ANF with every coefficient flipped
/// (the ANF obtained by toggling the value at the all-zero input).
struct AnfStats {
    int degree = 0;
    std::uint64_t sparsity = 0;
};
AnfStats anf_stats(const Anf& a);
AnfStats complement_anf_stats(const Anf& a);

/// In-place GF(2) Moebius (Reed-Muller) butterfly over 2^r packed bits.
/// Involution: applying it twice restores the input.
void moebius_in_place(std::span<std::uint64_t> words, int r);

/// Truth table of the Boolean function identified with fn on indices 1..2^r - 1,
/// with the free value at the all-zero input set to c.
/// Legendre requires 2^r <= p so no index hits a multiple of p.
TruthTable truth_table_from_fn(const ArithFn& fn, int r, bool c);

/// r = floor(log2 p), the variable count used for Legendre sweeps.
int default_r(std::uint64_t p);

Anf anf_from_table(const TruthTable& t);
TruthTable table_from_anf(const Anf& a);

/// ANF with a_I = 1 exactly when the minimum element of a nonempty I is even.
/// Has sparsity floor(2^r / 3) and its arithmetic function flips sign under doubling.
Anf min_even_extremal(int r);

/// For B built from a function with f(2n) = -f(n): the (r-1)-variable function
/// F(x) = B(x, 0) + B(0, x), i.e. F(m) = B(m) xor B(2m). Throws DoublingViolation
/// naming the first point where the doubling relation fails.
Anf doubling_xor_anf(const TruthTable& t);

class DoublingViolation : public std::domain_error {
public:
    explicit DoublingViolation(std::uint64_t n)
        : std::domain_error("doubling relation f(2n) = -f(n) fails at n = " + std::to_string(n)),
          n_(n) {}
    std::uint64_t n() const { return n_; }

private:
    std::uint64_t n_;
};

/// Restriction construction for Legendre moduli whose least non-residue q exceeds 2:
/// evaluates B on points spread with stride s = ceil(log2 q) and on their q-multiples,
/// giving a floor(r/s)-variable function that is 1 everywhere except the origin.
struct NqrRestriction {
    int vars = 0;          // floor(r / s)
    int s = 0;             // ceil(log2 q)
    std::uint64_t nqr = 0; // q
    Anf f;
};
NqrRestriction nqr_restriction_anf(const TruthTable& t, std::uint64_t p);

class ConstructionOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact means of sparsity and degree over all 2^(2^r) Boolean functions in
/// r variables, by exhaustive enumeration. Capacity r <= 4.
struct ExhaustiveMeans {
    std::uint64_t sparsity_sum = 0;
    std::uint64_t degree_sum = 0;
    std::uint64_t count = 0;  // 2^(2^r)
};
ExhaustiveMeans exhaustive_expected_values(int r);

/// Text dump: header "r=<r> c=<c> kind=<kind>" then one "<I in hex> 1" line per
/// set coefficient, ascending.
void write_anf(std::ostream& os, const Anf& a, bool c, const std::string& kind);

}  // namespace arithseq
