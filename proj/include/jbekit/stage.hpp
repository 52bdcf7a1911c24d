#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "jbekit/bwt.hpp"
#include "jbekit/bytes.hpp"

namespace jbekit {

// Wire ids are fixed by the container format.
enum class StageId : std::uint8_t {
    Rle = 1,
    Bwt = 2,
    Mtf = 3,
    Jbe = 4,
    Ari = 5,
};

inline constexpr StageId kAllStages[] = {StageId::Rle, StageId::Bwt, StageId::Mtf,
                                         StageId::Jbe, StageId::Ari};

const char* stage_name(StageId id);
std::optional<StageId> stage_from_name(std::string_view name);  // case-insensitive
std::optional<StageId> stage_from_wire(std::uint8_t id);

struct StageOptions {
    std::uint32_t bwt_block_size = kDefaultBwtBlockSize;
};

// Every stage output is self-contained: all metadata (BWT primary index, JBE
// sub-stream lengths, ...) is embedded so composition is pure byte-to-byte.
ByteBuffer stage_encode(StageId id, ByteView input, const StageOptions& options = {});
ByteBuffer stage_decode(StageId id, ByteView input);

}  // namespace jbekit
