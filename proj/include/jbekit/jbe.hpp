#pragma once

#include <cstdint>

#include "jbekit/bytes.hpp"

namespace jbekit {

// J-bit encoding splits a byte stream into the stream of nonzero bytes
// (data I) and a bitmap marking zero/nonzero positions (data II).
//
// Serialized stream, bit-exact:
//   bytes 0..7                 original length, unsigned little-endian
//   bytes 8..8+|data I|        data I (every nonzero input byte, in order)
//   remaining ceil(length/8)   data II, MSB-first bitmap, zero-padded
struct JbeSplit {
    std::uint64_t original_length = 0;
    ByteBuffer data_i;
    ByteBuffer data_ii;
};

JbeSplit jbe_encode_split(ByteView input);
ByteBuffer jbe_encode(ByteView input);

// Inverse of jbe_encode_split; validates bitmap/data-I consistency and
// zero padding.
ByteBuffer jbe_merge(const JbeSplit& split);
ByteBuffer jbe_decode(ByteView input);

}  // namespace jbekit
