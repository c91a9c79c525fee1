#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace arithseq {

/// Polynomial over GF(2) packed into a 64-bit mask: bit j-1 is the coefficient of X^(j-1).
/// Index k and polynomial share one encoding, so F2Poly{k} is the polynomial with
/// coefficient bits equal to the binary digits of k.
struct F2Poly {
    std::uint64_t coeffs = 0;

    /// Degree of the polynomial; -1 for the zero polynomial (which has no degree).
    int degree() const { return coeffs ? 63 - std::countl_zero(coeffs) : -1; }

    bool is_zero() const { return coeffs == 0; }

    friend bool operator==(F2Poly, F2Poly) = default;
};

/// Carryless product. Degrees must sum below 64.
F2Poly operator*(F2Poly a, F2Poly b);

/// (quotient, remainder) of a / b. Throws std::invalid_argument if b is zero.
std::pair<F2Poly, F2Poly> divmod(F2Poly a, F2Poly b);

/// Trial-division irreducibility test for nonconstant polynomials.
bool is_irreducible(F2Poly f);

/// Liouville values for GF(2)[X] polynomials indexed by their integer encoding,
/// built with a smallest-irreducible-factor sieve.
class F2LiouvilleSieve {
public:
    /// Values for indices 1..max_index. Throws CapacityError above degree 24
    /// (max_index >= 2^25).
    explicit F2LiouvilleSieve(std::uint64_t max_index);

    std::uint64_t max_index() const { return lam_.size() - 1; }

    /// lambda(F_k) in {-1, +1}. Throws CapacityError when k is out of range.
    std::int8_t value(std::uint64_t k) const;

    /// Sum of lambda(F) over the 2^d polynomials of degree exactly d.
    /// Throws CapacityError when the sieve does not cover degree d.
    std::int64_t carlitz_sum(int d) const;

    const std::vector<std::int8_t>& values() const { return lam_; }

private:
    std::vector<std::int8_t> lam_;  // entry 0 unused
};

}  // namespace arithseq
