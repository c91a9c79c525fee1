#include "doctest.h"

#include <random>
#include <sstream>

#include "arithseq/checks.hpp"
#include "arithseq/sequence.hpp"
#include "oracles.hpp"

using namespace arithseq;

namespace {

std::string ascii_of(const BitVec& bits) {
    std::ostringstream os;
    write_ascii(os, bits);
    std::string s = os.str();
    s.pop_back();  // trailing newline
    return s;
}

}  // namespace

TEST_CASE("legendre sequence p = 5") {
    const BitSequence seq = generate_sequence(ArithFn::legendre(5), 9);
    CHECK(ascii_of(seq.bits) == "011000110");
    CHECK(seq.origin == "legendre-5");
    CHECK_FALSE(seq.s(5));  // multiple of p carries bit 0
}

TEST_CASE("liouville sequences") {
    const BitSequence li = generate_sequence(ArithFn::liouville_int(), 4);
    CHECK(ascii_of(li.bits) == "0110");

    const BitSequence lf = generate_sequence(ArithFn::liouville_f2(), 8);
    CHECK_FALSE(lf.s(1));
    CHECK(lf.s(2));
    CHECK(lf.s(7));   // X^2 + X + 1 irreducible
    CHECK_FALSE(lf.s(6));  // X(X+1)
}

TEST_CASE("doubling rule for generated sequences") {
    for (const ArithFn fn : {ArithFn::liouville_int(), ArithFn::liouville_f2()}) {
        const BitSequence seq = generate_sequence(fn, 4096);
        std::uint64_t bad = 0;
        CHECK(satisfies_doubling_rule(seq.bits, &bad));
    }
    // Legendre with 2 a non-residue satisfies it away from multiples of p
    const BitSequence seq = generate_sequence(ArithFn::legendre(11), 4 * 11);
    for (std::uint64_t n = 1; 2 * n <= seq.length(); ++n)
        if (n % 11 != 0) CHECK(seq.s(2 * n) == !seq.s(n));
}

TEST_CASE("legendre kind validates the modulus") {
    CHECK_THROWS_AS(ArithFn::legendre(9), std::invalid_argument);
    CHECK_THROWS_AS(ArithFn::legendre(2), std::invalid_argument);
    CHECK_THROWS_AS(ArithFn::legendre(1), std::invalid_argument);
    CHECK(arith_fn_from_name("legendre-13").p == 13);
    CHECK(arith_fn_from_name("liouville-f2").kind == ArithKind::liouville_f2);
    CHECK_THROWS_AS(arith_fn_from_name("nope"), std::invalid_argument);
}

TEST_CASE("patched legendre sequence") {
    const BitSequence plain = generate_sequence(ArithFn::legendre(5), 20);
    const BitSequence patched = patched_legendre_sequence(5, 20);
    for (std::uint64_t n = 1; n <= 9; ++n) CHECK(patched.s(n) == plain.s(n));
    CHECK(patched.s(10));  // s_10 = 1 - s_5 = 1
    std::uint64_t bad = 0;
    CHECK(satisfies_doubling_rule(patched.bits, &bad));
    CHECK_THROWS_AS(patched_legendre_sequence(7, 10), std::invalid_argument);
    CHECK_THROWS_AS(patched_legendre_sequence(17, 10), std::invalid_argument);

    SUBCASE("doubling rule across nested powers of two times p") {
        const BitSequence big = patched_legendre_sequence(11, 8 * 11);
        std::uint64_t viol = 0;
        CHECK(satisfies_doubling_rule(big.bits, &viol));
    }
}

TEST_CASE("bit file round trips") {
    std::mt19937_64 rng(23);
    for (std::size_t len : {0u, 1u, 63u, 64u, 65u, 1000u}) {
        const BitVec bits = oracles::random_bits(len, rng);
        std::stringstream ascii;
        write_ascii(ascii, bits);
        CHECK(read_ascii(ascii) == bits);
        std::stringstream raw(std::ios::in | std::ios::out | std::ios::binary);
        write_raw(raw, bits);
        CHECK(read_raw(raw) == bits);
    }
    std::stringstream bad("01x1");
    CHECK_THROWS_AS(read_ascii(bad), std::invalid_argument);
}
