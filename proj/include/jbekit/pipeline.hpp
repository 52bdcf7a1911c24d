#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jbekit/bytes.hpp"
#include "jbekit/stage.hpp"

namespace jbekit {

using StageList = std::vector<StageId>;

inline constexpr int kPresetCount = 5;

// The five fixed stage chains:
//   1: RLE+ARI   2: BWT+MTF+ARI   3: BWT+RLE+ARI
//   4: RLE+BWT+MTF+RLE+ARI        5: RLE+BWT+MTF+JBE+ARI
StageList preset_stages(int preset);  // throws std::invalid_argument outside 1..5

struct CompressedArtifact {
    StageList stages;
    std::uint64_t original_length = 0;
    std::uint32_t checksum = 0;  // CRC-32 of the original bytes
    ByteBuffer payload;
};

// Applies stages left to right. When JBE is followed by at least one more
// stage, the input is split and the remaining stage suffix runs independently
// on data I and data II; the payload then holds
//   original_length (8 LE) || len(compressed data I) (8 LE)
//   || compressed data I || compressed data II.
// A trailing JBE stage encodes the plain combined stream.
CompressedArtifact pipeline_compress(ByteView input, const StageList& stages,
                                     const StageOptions& options = {});

// Inverts stages right to left, then verifies length and checksum. Stage
// decode errors propagate with the stage name attached.
ByteBuffer pipeline_decompress(const CompressedArtifact& artifact);

// Container format, bit-exact: magic "JBEK" (4), version 1 (1), stage count
// (1), stage ids (1 each), original_length (8 LE), CRC-32 (4 LE), payload.
ByteBuffer container_write(const CompressedArtifact& artifact);
CompressedArtifact container_read(ByteView bytes);

std::uint64_t container_size(const CompressedArtifact& artifact);

// Compressed container size over original size; smaller is better. Absent for
// empty originals.
std::optional<double> compression_ratio(const CompressedArtifact& artifact);

ByteBuffer compress_to_container(ByteView input, const StageList& stages,
                                 const StageOptions& options = {});
ByteBuffer decompress_container(ByteView container);

}  // namespace jbekit
