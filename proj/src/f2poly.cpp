#include "arithseq/f2poly.hpp"

#include <stdexcept>

#include "arithseq/errors.hpp"

namespace arithseq {

F2Poly operator*(F2Poly a, F2Poly b) {
    std::uint64_t r = 0;
    for (std::uint64_t m = b.coeffs; m; m &= m - 1) r ^= a.coeffs << std::countr_zero(m);
    return {r};
}

std::pair<F2Poly, F2Poly> divmod(F2Poly a, F2Poly b) {
    if (b.is_zero()) throw std::invalid_argument("divmod: division by the zero polynomial");
    const int db = b.degree();
    std::uint64_t q = 0, r = a.coeffs;
    while (r && (63 - std::countl_zero(r)) >= db) {
        const int shift = (63 - std::countl_zero(r)) - db;
        q |= std::uint64_t{1} << shift;
        r ^= b.coeffs << shift;
    }
    return {F2Poly{q}, F2Poly{r}};
}

bool is_irreducible(F2Poly f) {
    const int d = f.degree();
    if (d < 1) return false;
    for (std::uint64_t q = 2; F2Poly{q}.degree() * 2 <= d; ++q)
        if (divmod(f, F2Poly{q}).second.is_zero()) return false;
    return true;
}

F2LiouvilleSieve::F2LiouvilleSieve(std::uint64_t max_index) {
    if (max_index < 1) throw std::invalid_argument("F2LiouvilleSieve: max_index must be >= 1");
    if (max_index >= (std::uint64_t{1} << 25))
        throw CapacityError("F2LiouvilleSieve: capacity is degree 24 (max_index < 2^25)");

    // cof[m] is the cofactor m / q for the smallest irreducible factor q of m.
    // Marking in increasing q order makes the first write the smallest factor.
    const int cap_deg = F2Poly{max_index}.degree();
    std::vector<std::uint32_t> cof(max_index + 1, 0);
    for (std::uint64_t q = 2; q <= max_index; ++q) {
        if (cof[q]) continue;  // q composite
        const int dq = F2Poly{q}.degree();
        for (std::uint64_t g = 2; dq + F2Poly{g}.degree() <= cap_deg; ++g) {
            const std::uint64_t m = (F2Poly{q} * F2Poly{g}).coeffs;
            if (m <= max_index && !cof[m]) cof[m] = static_cast<std::uint32_t>(g);
        }
    }

    lam_.assign(max_index + 1, 0);
    lam_[1] = 1;
    for (std::uint64_t k = 2; k <= max_index; ++k)
        lam_[k] = cof[k] ? static_cast<std::int8_t>(-lam_[cof[k]]) : static_cast<std::int8_t>(-1);
}

std::int8_t F2LiouvilleSieve::value(std::uint64_t k) const {
    if (k < 1 || k > max_index())
        throw CapacityError("F2LiouvilleSieve::value: index outside sieve range");
    return lam_[k];
}

std::int64_t F2LiouvilleSieve::carlitz_sum(int d) const {
    if (d < 1) throw std::invalid_argument("carlitz_sum: degree must be >= 1");
    const std::uint64_t lo = std::uint64_t{1} << d;
    const std::uint64_t hi = (std::uint64_t{1} << (d + 1)) - 1;
    if (hi > max_index()) throw CapacityError("carlitz_sum: degree exceeds sieve capacity");
    std::int64_t s = 0;
    for (std::uint64_t k = lo; k <= hi; ++k) s += lam_[k];
    return s;
}

}  // namespace arithseq
