#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "bitword.hpp"
#include "errors.hpp"
#include "sequence.hpp"

namespace forddisc {

// Packed container: 16-byte header, then the symbols packed 8 per byte,
// most significant bit first, final byte zero-padded.
//
//   offset 0  "FDBS"            magic
//   offset 4  version (1)
//   offset 5  order
//   offset 6  symbol count, little-endian uint64
//   offset 14 two reserved zero bytes
inline constexpr std::array<char, 4> packed_magic = {'F', 'D', 'B', 'S'};
inline constexpr std::uint8_t packed_version = 1;

inline void write_packed_header(std::ostream& out, unsigned order, std::uint64_t count) {
    out.write(packed_magic.data(), 4);
    out.put(static_cast<char>(packed_version));
    out.put(static_cast<char>(order));
    for (unsigned i = 0; i < 8; ++i) out.put(static_cast<char>((count >> (8 * i)) & 0xff));
    out.put(0);
    out.put(0);
}

template <typename SymbolFn>
void write_packed(std::ostream& out, unsigned order, std::uint64_t count, SymbolFn next) {
    write_packed_header(out, order, count);
    std::uint8_t acc = 0;
    unsigned used = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        acc = static_cast<std::uint8_t>((acc << 1) | (next() & 1));
        if (++used == 8) {
            out.put(static_cast<char>(acc));
            acc = 0;
            used = 0;
        }
    }
    if (used > 0) out.put(static_cast<char>(acc << (8 - used)));
}

inline void write_packed(std::ostream& out, FkmSymbolStream& s) {
    write_packed(out, s.order(), s.total(), [&s] { return s.next(); });
}

inline void write_packed(std::ostream& out, unsigned order, const BitWord& w) {
    std::size_t i = 0;
    write_packed(out, order, w.size(), [&w, &i] { return w[i++]; });
}

// ASCII form: '0'/'1' symbols, one line, trailing newline.
template <typename SymbolFn>
void write_bits(std::ostream& out, std::uint64_t count, SymbolFn next) {
    for (std::uint64_t i = 0; i < count; ++i) out.put(next() ? '1' : '0');
    out.put('\n');
}

inline void write_bits(std::ostream& out, FkmSymbolStream& s) {
    write_bits(out, s.total(), [&s] { return s.next(); });
}

struct PackedContents {
    unsigned order = 0;
    BitWord word;
};

inline PackedContents read_packed(std::istream& in) {
    std::array<char, 16> header{};
    in.read(header.data(), header.size());
    if (!in) throw std::invalid_argument("read_packed: truncated header");
    for (unsigned i = 0; i < 4; ++i)
        if (header[i] != packed_magic[i]) throw std::invalid_argument("read_packed: bad magic");
    if (static_cast<std::uint8_t>(header[4]) != packed_version)
        throw std::invalid_argument("read_packed: unsupported version");
    PackedContents pc;
    pc.order = static_cast<std::uint8_t>(header[5]);
    std::uint64_t count = 0;
    for (unsigned i = 0; i < 8; ++i)
        count |= std::uint64_t{static_cast<std::uint8_t>(header[6 + i])} << (8 * i);
    if (count > (std::uint64_t{1} << 30)) throw capacity_error("read_packed: symbol count too large");
    std::vector<std::uint8_t> bits;
    bits.reserve(count);
    std::uint8_t acc = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        if (i % 8 == 0) {
            int c = in.get();
            if (c == std::char_traits<char>::eof()) throw std::invalid_argument("read_packed: truncated payload");
            acc = static_cast<std::uint8_t>(c);
        }
        bits.push_back((acc >> (7 - i % 8)) & 1);
    }
    pc.word = BitWord(std::move(bits));
    return pc;
}

} // namespace forddisc
