#include "arithseq/sequence.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "arithseq/f2poly.hpp"
#include "arithseq/numtheory.hpp"

namespace arithseq {

ArithFn ArithFn::legendre(std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("ArithFn::legendre: p must be an odd prime");
    return {ArithKind::legendre, p};
}

std::string ArithFn::name() const {
    switch (kind) {
        case ArithKind::legendre: return "legendre-" + std::to_string(p);
        case ArithKind::liouville_int: return "liouville-int";
        case ArithKind::liouville_f2: return "liouville-f2";
    }
    return "?";
}

ArithFn arith_fn_from_name(const std::string& name) {
    if (name == "liouville-int") return ArithFn::liouville_int();
    if (name == "liouville-f2") return ArithFn::liouville_f2();
    if (name.starts_with("legendre-")) return ArithFn::legendre(std::stoull(name.substr(9)));
    throw std::invalid_argument("unknown arithmetic function name: " + name);
}

BitSequence generate_sequence(const ArithFn& fn, std::size_t length) {
    BitVec bits(length);
    switch (fn.kind) {
        case ArithKind::legendre: {
            const LegendreTable table(fn.p);
            for (std::size_t n = 1; n <= length; ++n) bits.set(n - 1, table.bit(n));
            break;
        }
        case ArithKind::liouville_int: {
            const auto lam = liouville_sieve(length);
            for (std::size_t n = 1; n <= length; ++n) bits.set(n - 1, lam[n] < 0);
            break;
        }
        case ArithKind::liouville_f2: {
            const F2LiouvilleSieve sieve(length == 0 ? 1 : length);
            for (std::size_t n = 1; n <= length; ++n) bits.set(n - 1, sieve.value(n) < 0);
            break;
        }
    }
    return {std::move(bits), fn.name()};
}

BitSequence patched_legendre_sequence(std::uint64_t p, std::size_t length) {
    if (p % 8 != 3 && p % 8 != 5)
        throw std::invalid_argument("patched_legendre_sequence: requires p = 3 or 5 mod 8");
    const LegendreTable table(p);
    BitVec bits(length);
    for (std::size_t n = 1; n <= length; ++n) {
        if (n % p != 0) {
            bits.set(n - 1, table.bit(n));
        } else {
            // s_{2kp} = 1 - s_{kp} with s_{kp} = 0 at odd k, so the bit is the
            // parity of the power of two in n / p.
            bits.set(n - 1, std::countr_zero(n / p) & 1);
        }
    }
    return {std::move(bits), "patched-legendre-" + std::to_string(p)};
}

void write_ascii(std::ostream& os, const BitVec& bits) {
    std::string line(bits.size(), '0');
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits.get(i)) line[i] = '1';
    os << line << '\n';
}

BitVec read_ascii(std::istream& is) {
    BitVec bits;
    char c;
    while (is.get(c)) {
        if (c == '0' || c == '1')
            bits.push_back(c == '1');
        else if (!std::isspace(static_cast<unsigned char>(c)))
            throw std::invalid_argument("read_ascii: unexpected character in bit stream");
    }
    return bits;
}

void write_raw(std::ostream& os, const BitVec& bits) {
    const std::uint64_t n = bits.size();
    unsigned char header[8];
    for (int i = 0; i < 8; ++i) header[i] = static_cast<unsigned char>(n >> (8 * i));
    os.write(reinterpret_cast<const char*>(header), 8);
    for (std::uint64_t w : bits.words()) {
        unsigned char buf[8];
        for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(w >> (8 * i));
        os.write(reinterpret_cast<const char*>(buf), 8);
    }
}

BitVec read_raw(std::istream& is) {
    unsigned char header[8];
    if (!is.read(reinterpret_cast<char*>(header), 8))
        throw std::invalid_argument("read_raw: missing length header");
    std::uint64_t n = 0;
    for (int i = 0; i < 8; ++i) n |= std::uint64_t{header[i]} << (8 * i);
    BitVec bits(n);
    auto words = bits.words();
    for (std::size_t w = 0; w < words.size(); ++w) {
        unsigned char buf[8];
        if (!is.read(reinterpret_cast<char*>(buf), 8))
            throw std::invalid_argument("read_raw: truncated word data");
        std::uint64_t word = 0;
        for (int i = 0; i < 8; ++i) word |= std::uint64_t{buf[i]} << (8 * i);
        words[w] = word;
    }
    if (n % 64 && (words.empty() ? false : (words.back() >> (n % 64)) != 0))
        throw std::invalid_argument("read_raw: nonzero padding bits beyond length");
    return bits;
}

void save_bits(const std::filesystem::path& path, const BitVec& bits, bool ascii) {
    std::ofstream os(path, ascii ? std::ios::out : std::ios::out | std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
    ascii ? write_ascii(os, bits) : write_raw(os, bits);
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

BitVec load_bits(const std::filesystem::path& path, bool ascii) {
    std::ifstream is(path, ascii ? std::ios::in : std::ios::in | std::ios::binary);
    if (!is) throw std::runtime_error("cannot open for reading: " + path.string());
    return ascii ? read_ascii(is) : read_raw(is);
}

}  // namespace arithseq
