#include <doctest.h>

#include <random>
#include <string>

#include "jbekit/stage.hpp"
#include "jbekit/error.hpp"
#include "testutil.hpp"

using namespace jbekit;

TEST_CASE("stage names and ids") {
    CHECK(std::string(stage_name(StageId::Rle)) == "RLE");
    CHECK(std::string(stage_name(StageId::Bwt)) == "BWT");
    CHECK(std::string(stage_name(StageId::Mtf)) == "MTF");
    CHECK(std::string(stage_name(StageId::Jbe)) == "JBE");
    CHECK(std::string(stage_name(StageId::Ari)) == "ARI");

    CHECK(stage_from_name("rle") == StageId::Rle);
    CHECK(stage_from_name("Bwt") == StageId::Bwt);
    CHECK(stage_from_name("MTF") == StageId::Mtf);
    CHECK(stage_from_name("jBe") == StageId::Jbe);
    CHECK(stage_from_name("ari") == StageId::Ari);
    CHECK(!stage_from_name("lzw").has_value());
    CHECK(!stage_from_name("").has_value());

    for (StageId id : kAllStages) {
        CHECK(stage_from_wire(static_cast<std::uint8_t>(id)) == id);
    }
    CHECK(!stage_from_wire(0).has_value());
    CHECK(!stage_from_wire(6).has_value());
    CHECK(!stage_from_wire(255).has_value());
}

TEST_CASE("stage dispatch fixed points") {
    CHECK(stage_encode(StageId::Mtf, {}).empty());
    CHECK(stage_encode(StageId::Jbe, {}) == ByteBuffer(8, 0x00));
    CHECK(stage_encode(StageId::Rle, ByteBuffer{0x41}) == ByteBuffer{0x41});
    CHECK(stage_decode(StageId::Jbe, ByteBuffer(8, 0x00)).empty());

    ByteBuffer ramp(256);
    for (std::size_t i = 0; i < ramp.size(); ++i) ramp[i] = static_cast<std::uint8_t>(i);
    CHECK(stage_decode(StageId::Mtf, stage_encode(StageId::Mtf, ramp)) == ramp);

    try {
        stage_decode(StageId::Bwt, ByteBuffer{0x00, 0x04, 0x00});
        FAIL("expected an exception");
    } catch (const CodecError& e) {
        CHECK(e.kind() == ErrorKind::TruncatedInput);
    }
}

TEST_CASE("every stage round trips every content shape") {
    std::mt19937_64 rng(333);
    std::vector<ByteBuffer> inputs = {
        {},
        ByteBuffer(1, 0x7A),
        ByteBuffer(4096, 0x00),
        ByteBuffer(4096, 0xFF),
    };
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t length = testutil::scattered_length(rng, 8192);
        switch (trial % 3) {
            case 0: inputs.push_back(testutil::uniform_buffer(rng, length)); break;
            case 1: inputs.push_back(testutil::sparse_buffer(rng, length)); break;
            default: inputs.push_back(testutil::runs_buffer(rng, length)); break;
        }
    }
    for (StageId id : kAllStages) {
        for (const ByteBuffer& input : inputs) {
            CHECK(stage_decode(id, stage_encode(id, input)) == input);
        }
    }
}

TEST_CASE("stage options reach the block transform") {
    std::mt19937_64 rng(444);
    const ByteBuffer input = testutil::runs_buffer(rng, 10000);
    StageOptions options;
    options.bwt_block_size = 512;
    const ByteBuffer encoded = stage_encode(StageId::Bwt, input, options);
    CHECK(read_u32le(encoded, 0) == 512);
    CHECK(stage_decode(StageId::Bwt, encoded) == input);
}
