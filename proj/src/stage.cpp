#include "jbekit/stage.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "jbekit/ari.hpp"
#include "jbekit/jbe.hpp"
#include "jbekit/mtf.hpp"
#include "jbekit/rle.hpp"

namespace jbekit {

const char* stage_name(StageId id) {
    switch (id) {
        case StageId::Rle: return "RLE";
        case StageId::Bwt: return "BWT";
        case StageId::Mtf: return "MTF";
        case StageId::Jbe: return "JBE";
        case StageId::Ari: return "ARI";
    }
    return "?";
}

std::optional<StageId> stage_from_name(std::string_view name) {
    std::string upper;
    upper.reserve(name.size());
    for (char c : name) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    for (StageId id : kAllStages) {
        if (upper == stage_name(id)) return id;
    }
    return std::nullopt;
}

std::optional<StageId> stage_from_wire(std::uint8_t id) {
    for (StageId candidate : kAllStages) {
        if (static_cast<std::uint8_t>(candidate) == id) return candidate;
    }
    return std::nullopt;
}

ByteBuffer stage_encode(StageId id, ByteView input, const StageOptions& options) {
    switch (id) {
        case StageId::Rle: return rle_encode(input);
        case StageId::Bwt: return bwt_encode(input, options.bwt_block_size);
        case StageId::Mtf: return mtf_encode(input);
        case StageId::Jbe: return jbe_encode(input);
        case StageId::Ari: return ari_encode(input);
    }
    throw std::invalid_argument("unhandled stage id");
}

ByteBuffer stage_decode(StageId id, ByteView input) {
    switch (id) {
        case StageId::Rle: return rle_decode(input);
        case StageId::Bwt: return bwt_decode(input);
        case StageId::Mtf: return mtf_decode(input);
        case StageId::Jbe: return jbe_decode(input);
        case StageId::Ari: return ari_decode(input);
    }
    throw std::invalid_argument("unhandled stage id");
}

}  // namespace jbekit
