#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace jbekit {

// Universal unit of all stages: an exact-length sequence of octets.
using ByteBuffer = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

// All multi-byte integers in streams and containers are unsigned little-endian.

inline void append_u32le(ByteBuffer& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 24));
}

inline void append_u64le(ByteBuffer& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

// Callers are responsible for bounds checks; decoders validate before reading.
inline std::uint32_t read_u32le(ByteView in, std::size_t offset) {
    return static_cast<std::uint32_t>(in[offset]) |
           static_cast<std::uint32_t>(in[offset + 1]) << 8 |
           static_cast<std::uint32_t>(in[offset + 2]) << 16 |
           static_cast<std::uint32_t>(in[offset + 3]) << 24;
}

inline std::uint64_t read_u64le(ByteView in, std::size_t offset) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) {
        v = (v << 8) | in[offset + static_cast<std::size_t>(i)];
    }
    return v;
}

}  // namespace jbekit
