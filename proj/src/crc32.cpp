#include "jbekit/crc32.hpp"

#include <array>

namespace jbekit {

namespace {

std::array<std::uint32_t, 256> make_table() {
    std::array<std::uint32_t, 256> table{};
    for (std::uint32_t i = 0; i < 256; ++i) {
        std::uint32_t c = i;
        for (int k = 0; k < 8; ++k) {
            c = (c & 1u) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
        }
        table[i] = c;
    }
    return table;
}

}  // namespace

std::uint32_t crc32(ByteView data) {
    static const std::array<std::uint32_t, 256> table = make_table();
    std::uint32_t c = 0xFFFFFFFFu;
    for (std::uint8_t byte : data) {
        c = table[(c ^ byte) & 0xFFu] ^ (c >> 8);
    }
    return c ^ 0xFFFFFFFFu;
}

}  // namespace jbekit
