#pragma once

#include "jbekit/bytes.hpp"

namespace jbekit {

// Byte-oriented run-length encoding. Two consecutive equal bytes start a run
// token: both bytes are emitted followed by one count byte giving additional
// repeats beyond the pair (0..255), so one token covers at most 257 bytes.
// Singleton bytes are emitted verbatim. Runs are chunked so that every chunk
// is a full token: encoding a run of n >= 2 always takes exactly
// 3 * ceil(n / 257) bytes.
ByteBuffer rle_encode(ByteView input);
ByteBuffer rle_decode(ByteView input);

}  // namespace jbekit
