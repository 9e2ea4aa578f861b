#pragma once

// Coloring file, version 1:
//
//   poset-ramsey-coloring v1 N=<N>
//   <hex bytes>
//
// Byte b holds vertices 8b..8b+7, vertex 8b+i in bit i (little-endian within
// the byte); each byte is written as two lowercase hex digits, high nibble
// first. Vertex mask 0 comes first. Lattices with fewer than 8 vertices still
// use one byte, with the unused high bits zero. The loader accepts whitespace
// anywhere in the hex body.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "lattice.hpp"

namespace poset_ramsey {

inline constexpr const char* coloring_magic = "poset-ramsey-coloring v1 N=";

inline std::size_t coloring_byte_count(unsigned dim) {
    return std::max<std::size_t>(1, (std::size_t{1} << dim) / 8);
}

inline std::string write_coloring(const Coloring& c) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out = coloring_magic + std::to_string(c.dim()) + "\n";
    const auto bytes = coloring_byte_count(c.dim());
    out.reserve(out.size() + 2 * bytes + 1);
    for (std::size_t b = 0; b < bytes; ++b) {
        const auto byte = static_cast<unsigned>((c.words()[b / 8] >> (8 * (b % 8))) & 0xffu);
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 0xf]);
    }
    out.push_back('\n');
    return out;
}

inline Coloring read_coloring(const std::string& text,
                              unsigned max_dim = default_max_coloring_dimension) {
    const auto eol = text.find('\n');
    const std::string header = text.substr(0, eol);
    const std::string magic = coloring_magic;
    if (header.compare(0, magic.size(), magic) != 0) {
        throw format_error("missing coloring header '" + magic + "<N>'", "line 1");
    }
    unsigned dim = 0;
    {
        const std::string digits = header.substr(magic.size());
        if (digits.empty() || digits.size() > 2 ||
            !std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
            throw format_error("bad dimension '" + digits + "'", "line 1");
        }
        dim = static_cast<unsigned>(std::stoul(digits));
    }
    Coloring c(dim, Color::red, max_dim);
    const auto bytes = coloring_byte_count(dim);
    const std::size_t vertices = c.vertex_count();

    std::size_t line = 2, nibbles = 0;
    unsigned current = 0;
    auto nibble_value = [](char ch) -> int {
        if (ch >= '0' && ch <= '9') return ch - '0';
        if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
        if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
        return -1;
    };
    for (std::size_t pos = (eol == std::string::npos ? text.size() : eol + 1); pos < text.size(); ++pos) {
        const char ch = text[pos];
        if (ch == '\n') {
            ++line;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        const int value = nibble_value(ch);
        if (value < 0) {
            throw format_error(std::string("non-hex character '") + ch + "'",
                               "line " + std::to_string(line) + ", offset " + std::to_string(pos));
        }
        if (nibbles / 2 >= bytes) {
            throw format_error("more hex data than 2^N bits", "line " + std::to_string(line));
        }
        current = (current << 4) | static_cast<unsigned>(value);
        if (++nibbles % 2 == 0) {
            const std::size_t b = nibbles / 2 - 1;
            for (unsigned i = 0; i < 8; ++i) {
                if (!((current >> i) & 1u)) continue;
                const std::size_t v = 8 * b + i;
                if (v >= vertices) {
                    throw format_error("padding bits must be zero", "line " + std::to_string(line));
                }
                c.set(static_cast<VertexMask>(v), Color::blue);
            }
            current = 0;
        }
    }
    if (nibbles != 2 * bytes) {
        throw format_error("expected " + std::to_string(2 * bytes) + " hex digits, found " +
                               std::to_string(nibbles),
                           "line " + std::to_string(line));
    }
    return c;
}

} // namespace poset_ramsey
