#include "arithseq/checks.hpp"

#include <stdexcept>

#include "arithseq/lincomplex.hpp"
#include "arithseq/sequence.hpp"

namespace arithseq {

std::uint64_t legendre_periodic_lc_formula(std::uint64_t p) {
    switch (p % 8) {
        case 1: return (p - 1) / 2;
        case 3: return p;
        case 5: return p - 1;
        case 7: return (p + 1) / 2;
        default: throw std::invalid_argument("legendre_periodic_lc_formula: p must be odd");
    }
}

bool satisfies_doubling_rule(const BitVec& bits, std::uint64_t* first_violation) {
    for (std::uint64_t n = 1; 2 * n <= bits.size(); ++n) {
        if (bits.get(2 * n - 1) == bits.get(n - 1)) {
            if (first_violation) *first_violation = n;
            return false;
        }
    }
    return true;
}

CheckResult check_doubling_profile_band(const BitVec& bits, std::string_view label) {
    CheckResult res{"profile-band/" + std::string(label), true, ""};
    std::uint64_t bad = 0;
    if (!satisfies_doubling_rule(bits, &bad)) {
        res.pass = false;
        res.detail = "precondition s_{2n} = 1 - s_n fails at n = " + std::to_string(bad);
        return res;
    }
    const LCProfile profile = bm_profile(bits, bits.size());
    for (std::size_t n = 1; n <= bits.size(); ++n) {
        const std::uint64_t l = profile.l(n);
        const std::uint64_t lo = n / 2, hi = n / 2 + 1;
        if (l < lo || l > hi) {
            res.pass = false;
            res.detail = "L(S," + std::to_string(n) + ") = " + std::to_string(l) +
                         " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
            return res;
        }
    }
    res.detail = "band holds for N = 1.." + std::to_string(bits.size());
    return res;
}

CheckResult check_legendre_profile_band(std::uint64_t p) {
    const BitSequence seq = generate_sequence(ArithFn::legendre(p), 2 * p + 5);
    return check_legendre_profile_band(seq.bits, p);
}

CheckResult check_legendre_profile_band(const BitVec& bits, std::uint64_t p) {
    CheckResult res{"legendre-band/p=" + std::to_string(p), true, ""};
    if (p % 8 != 3 && p % 8 != 5)
        throw std::invalid_argument("check_legendre_profile_band: requires p = 3 or 5 mod 8");
    const std::size_t n_max = bits.size();
    const std::uint64_t settled = legendre_periodic_lc_formula(p);
    const LCProfile profile = bm_profile(bits, n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        const std::uint64_t l = profile.l(n);
        // ceil((m - 1)/2) = m/2 in integer division
        const std::uint64_t lo = std::min<std::uint64_t>(n, 2 * p - 1) / 2;
        const std::uint64_t hi = std::min<std::uint64_t>(n, 2 * p - 2) / 2 + 1;
        if (l < lo || l > hi) {
            res.pass = false;
            res.detail = "L(L_p," + std::to_string(n) + ") = " + std::to_string(l) +
                         " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
            return res;
        }
        if (n >= 2 * p && l != settled) {
            res.pass = false;
            res.detail = "L(L_p," + std::to_string(n) + ") = " + std::to_string(l) +
                         " but the periodic value is " + std::to_string(settled);
            return res;
        }
    }
    res.detail = "band holds for N = 1.." + std::to_string(n_max) +
                 ", settles at L = " + std::to_string(settled);
    return res;
}

}  // namespace arithseq
