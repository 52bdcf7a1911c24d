#include <doctest.h>

#include <random>
#include <string>

#include "jbekit/ari.hpp"
#include "jbekit/error.hpp"
#include "jbekit/jbe.hpp"
#include "jbekit/pipeline.hpp"
#include "jbekit/rle.hpp"
#include "testutil.hpp"

using namespace jbekit;

namespace {

ErrorKind container_error(const ByteBuffer& bytes) {
    try {
        decompress_container(bytes);
    } catch (const CodecError& e) {
        return e.kind();
    }
    FAIL("expected an exception");
    return ErrorKind::CorruptStream;
}

std::vector<ByteBuffer> assorted_inputs() {
    std::mt19937_64 rng(555);
    std::vector<ByteBuffer> inputs = {
        {},
        ByteBuffer(1, 0x41),
        ByteBuffer(8192, 0x00),
        ByteBuffer(2048, 0xFF),
    };
    inputs.push_back(testutil::uniform_buffer(rng, 6000));
    inputs.push_back(testutil::sparse_buffer(rng, 9000));
    inputs.push_back(testutil::runs_buffer(rng, 12000));
    return inputs;
}

}  // namespace

TEST_CASE("preset stage chains") {
    CHECK(preset_stages(1) == StageList{StageId::Rle, StageId::Ari});
    CHECK(preset_stages(2) == StageList{StageId::Bwt, StageId::Mtf, StageId::Ari});
    CHECK(preset_stages(3) == StageList{StageId::Bwt, StageId::Rle, StageId::Ari});
    CHECK(preset_stages(4) == StageList{StageId::Rle, StageId::Bwt, StageId::Mtf, StageId::Rle,
                                        StageId::Ari});
    CHECK(preset_stages(5) == StageList{StageId::Rle, StageId::Bwt, StageId::Mtf, StageId::Jbe,
                                        StageId::Ari});
    CHECK_THROWS_AS(preset_stages(0), std::invalid_argument);
    CHECK_THROWS_AS(preset_stages(6), std::invalid_argument);
}

TEST_CASE("every preset round trips every content shape") {
    for (int preset = 1; preset <= kPresetCount; ++preset) {
        for (const ByteBuffer& input : assorted_inputs()) {
            const ByteBuffer container = compress_to_container(input, preset_stages(preset));
            CHECK(decompress_container(container) == input);
        }
    }
}

TEST_CASE("container layout is frozen") {
    const ByteBuffer input(5, 0x41);
    const ByteBuffer container = compress_to_container(input, {StageId::Rle});
    const ByteBuffer expected = {
        'J', 'B', 'E', 'K',
        0x01,
        0x01,
        0x01,
        0x05, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
        0x09, 0x51, 0xF8, 0x19,
        0x41, 0x41, 0x03,
    };
    CHECK(container == expected);

    const CompressedArtifact artifact = container_read(container);
    CHECK(artifact.stages == StageList{StageId::Rle});
    CHECK(artifact.original_length == 5);
    CHECK(artifact.checksum == 0x19F85109u);
    CHECK(artifact.payload == ByteBuffer{0x41, 0x41, 0x03});
    CHECK(container_size(artifact) == container.size());
    CHECK(pipeline_decompress(artifact) == input);
}

TEST_CASE("split coding keeps the two streams independent") {
    std::mt19937_64 rng(666);
    const ByteBuffer input = testutil::sparse_buffer(rng, 4000);
    const CompressedArtifact artifact = pipeline_compress(input, {StageId::Jbe, StageId::Ari});

    const ByteView payload(artifact.payload);
    REQUIRE(payload.size() > 16);
    const std::uint64_t original_length = read_u64le(payload, 0);
    const std::uint64_t coded_i_len = read_u64le(payload, 8);
    CHECK(original_length == input.size());
    REQUIRE(16 + coded_i_len < payload.size());

    const JbeSplit split = jbe_encode_split(input);
    CHECK(ari_decode(payload.subspan(16, coded_i_len)) == split.data_i);
    CHECK(ari_decode(payload.subspan(16 + coded_i_len)) == split.data_ii);
    CHECK(pipeline_decompress(artifact) == input);
}

TEST_CASE("trailing split stage encodes the combined stream") {
    std::mt19937_64 rng(777);
    const ByteBuffer input = testutil::sparse_buffer(rng, 2000);
    const CompressedArtifact artifact = pipeline_compress(input, {StageId::Rle, StageId::Jbe});
    CHECK(artifact.payload == jbe_encode(rle_encode(input)));
    CHECK(pipeline_decompress(artifact) == input);
}

TEST_CASE("repeated split stages nest") {
    std::mt19937_64 rng(888);
    for (const ByteBuffer& input :
         {testutil::sparse_buffer(rng, 3000), ByteBuffer(500, 0x00), ByteBuffer{}}) {
        const StageList stages = {StageId::Jbe, StageId::Jbe, StageId::Ari};
        const ByteBuffer container = compress_to_container(input, stages);
        CHECK(decompress_container(container) == input);
    }
}

TEST_CASE("pipeline empty stage list stores the payload verbatim") {
    std::mt19937_64 rng(999);
    const ByteBuffer input = testutil::uniform_buffer(rng, 300);
    const CompressedArtifact artifact = pipeline_compress(input, {});
    CHECK(artifact.payload == input);
    CHECK(pipeline_decompress(artifact) == input);
}

TEST_CASE("compression ratio pins") {
    SUBCASE("eight kibibytes of zeros collapse under the run preset") {
        const ByteBuffer zeros(8192, 0x00);
        const CompressedArtifact artifact = pipeline_compress(zeros, preset_stages(1));
        CHECK(artifact.payload.size() <= 200);
    }
    SUBCASE("incompressible input expands") {
        std::mt19937_64 rng(123);
        const ByteBuffer noise = testutil::uniform_buffer(rng, 4096);
        const CompressedArtifact artifact = pipeline_compress(noise, preset_stages(2));
        CHECK(*compression_ratio(artifact) >= 1.0);
    }
    SUBCASE("all-zero input nearly vanishes under the split preset") {
        const ByteBuffer zeros(65536, 0x00);
        const CompressedArtifact artifact = pipeline_compress(zeros, preset_stages(5));
        CHECK(*compression_ratio(artifact) < 0.01);
    }
    SUBCASE("empty input has no ratio") {
        const CompressedArtifact artifact = pipeline_compress({}, preset_stages(1));
        CHECK(!compression_ratio(artifact).has_value());
    }
}

TEST_CASE("container rejects malformed bytes") {
    const ByteBuffer good = compress_to_container(ByteBuffer(100, 0x2A), preset_stages(1));

    SUBCASE("wrong magic") {
        ByteBuffer bytes = good;
        bytes[0] = 'X';
        try {
            decompress_container(bytes);
            FAIL("expected an exception");
        } catch (const CodecError& e) {
            CHECK(e.kind() == ErrorKind::CorruptStream);
            CHECK(std::string(e.what()).find("not a JBEK container") != std::string::npos);
        }
    }
    SUBCASE("truncation at every header boundary") {
        for (std::size_t keep : {std::size_t{0}, std::size_t{3}, std::size_t{5}, std::size_t{10},
                                 std::size_t{17}}) {
            ByteBuffer bytes(good.begin(), good.begin() + keep);
            try {
                decompress_container(bytes);
                FAIL("expected an exception");
            } catch (const CodecError& e) {
                CHECK(e.kind() == ErrorKind::TruncatedInput);
                CHECK(std::string(e.what()).find("truncated") != std::string::npos);
            }
        }
    }
    SUBCASE("unknown stage id") {
        ByteBuffer bytes = good;
        bytes[6] = 0x09;
        CHECK(container_error(bytes) == ErrorKind::UnknownStage);
    }
    SUBCASE("unsupported version") {
        ByteBuffer bytes = good;
        bytes[4] = 0x02;
        CHECK(container_error(bytes) == ErrorKind::CorruptStream);
    }
    SUBCASE("tampered original length") {
        // Two stage ids, so the length field starts at offset 8.
        ByteBuffer bytes = good;
        bytes[8] ^= 0x01;
        CHECK(container_error(bytes) == ErrorKind::LengthMismatch);
    }
    SUBCASE("tampered checksum") {
        ByteBuffer bytes = good;
        bytes[16] ^= 0x01;
        CHECK(container_error(bytes) == ErrorKind::ChecksumMismatch);
    }
}

TEST_CASE("stage decode failures name the stage") {
    ByteBuffer container = compress_to_container(ByteBuffer(64, 0x11), {StageId::Bwt});
    container.resize(container.size() - 2);
    try {
        decompress_container(container);
        FAIL("expected an exception");
    } catch (const CodecError& e) {
        CHECK(e.kind() == ErrorKind::TruncatedInput);
        CHECK(e.detail().find("stage BWT") != std::string::npos);
    }
}
