#pragma once

#include "jbekit/bytes.hpp"

namespace jbekit {

// Move-to-front transform over the 256-symbol byte alphabet. The table starts
// as the identity ordering 0..255. Output length equals input length in both
// directions, and every byte sequence is a valid code stream.
ByteBuffer mtf_encode(ByteView input);
ByteBuffer mtf_decode(ByteView input);

}  // namespace jbekit
