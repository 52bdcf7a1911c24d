#pragma once

#include <cstdint>

#include "jbekit/bytes.hpp"

namespace jbekit {

// CRC-32 (IEEE 802.3 polynomial, reflected), as used by zlib and PNG.
std::uint32_t crc32(ByteView data);

}  // namespace jbekit
