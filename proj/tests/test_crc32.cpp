#include <doctest.h>

#include "jbekit/crc32.hpp"

using namespace jbekit;

TEST_CASE("crc32 reference vectors") {
    CHECK(crc32({}) == 0x00000000u);
    const ByteBuffer check = {'1', '2', '3', '4', '5', '6', '7', '8', '9'};
    CHECK(crc32(check) == 0xCBF43926u);
    const ByteBuffer aaaaa(5, 'A');
    CHECK(crc32(aaaaa) == 0x19F85109u);
}

TEST_CASE("crc32 reacts to any single byte change") {
    ByteBuffer data(64, 0x5C);
    const std::uint32_t reference = crc32(data);
    for (std::size_t i = 0; i < data.size(); ++i) {
        ByteBuffer tampered = data;
        tampered[i] ^= 0x01;
        CHECK(crc32(tampered) != reference);
    }
}
