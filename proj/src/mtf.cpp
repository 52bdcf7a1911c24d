#include "jbekit/mtf.hpp"

#include <array>
#include <cstring>
#include <numeric>

namespace jbekit {

namespace {

std::array<std::uint8_t, 256> identity_table() {
    std::array<std::uint8_t, 256> table;
    std::iota(table.begin(), table.end(), 0);
    return table;
}

}  // namespace

ByteBuffer mtf_encode(ByteView input) {
    std::array<std::uint8_t, 256> table = identity_table();
    ByteBuffer out;
    out.reserve(input.size());
    for (std::uint8_t byte : input) {
        std::size_t index = 0;
        while (table[index] != byte) ++index;
        out.push_back(static_cast<std::uint8_t>(index));
        std::memmove(table.data() + 1, table.data(), index);
        table[0] = byte;
    }
    return out;
}

ByteBuffer mtf_decode(ByteView input) {
    std::array<std::uint8_t, 256> table = identity_table();
    ByteBuffer out;
    out.reserve(input.size());
    for (std::uint8_t index : input) {
        const std::uint8_t byte = table[index];
        out.push_back(byte);
        std::memmove(table.data() + 1, table.data(), index);
        table[0] = byte;
    }
    return out;
}

}  // namespace jbekit
