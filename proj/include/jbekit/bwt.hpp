#pragma once

#include <cstdint>

#include "jbekit/bytes.hpp"

namespace jbekit {

inline constexpr std::uint32_t kDefaultBwtBlockSize = 1u << 20;

// One transformed block: the last column of the sorted rotation matrix plus
// the row holding the original string. Rotations are full cyclic shifts (no
// sentinel); ties between identical rotations are broken by original offset.
struct BwtBlock {
    std::uint32_t primary_index = 0;
    ByteBuffer last_column;
};

BwtBlock bwt_transform_block(ByteView block);
ByteBuffer bwt_invert_block(ByteView last_column, std::uint32_t primary_index);

// Stream format, all little-endian: 4-byte block_size, then per block
// 4-byte block_length, 4-byte primary_index, payload. Input is split into
// consecutive blocks of block_size bytes; only the final block may be short.
ByteBuffer bwt_encode(ByteView input, std::uint32_t block_size = kDefaultBwtBlockSize);
ByteBuffer bwt_decode(ByteView input);

}  // namespace jbekit
