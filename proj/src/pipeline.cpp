#include "jbekit/pipeline.hpp"

#include <span>
#include <stdexcept>
#include <string>

#include "jbekit/crc32.hpp"
#include "jbekit/error.hpp"
#include "jbekit/jbe.hpp"

namespace jbekit {

namespace {

using StageSpan = std::span<const StageId>;

ByteBuffer encode_chain(ByteView input, StageSpan stages, const StageOptions& options) {
    if (stages.empty()) return ByteBuffer(input.begin(), input.end());
    const StageId head = stages.front();
    const StageSpan rest = stages.subspan(1);

    if (head == StageId::Jbe && !rest.empty()) {
        JbeSplit split = jbe_encode_split(input);
        ByteBuffer coded_i = encode_chain(split.data_i, rest, options);
        ByteBuffer coded_ii = encode_chain(split.data_ii, rest, options);
        ByteBuffer out;
        append_u64le(out, split.original_length);
        append_u64le(out, coded_i.size());
        out.insert(out.end(), coded_i.begin(), coded_i.end());
        out.insert(out.end(), coded_ii.begin(), coded_ii.end());
        return out;
    }

    ByteBuffer encoded = stage_encode(head, input, options);
    return encode_chain(encoded, rest, options);
}

[[noreturn]] void rethrow_with_stage(StageId id, const CodecError& error) {
    throw CodecError(error.kind(),
                     std::string("stage ") + stage_name(id) + ": " + error.detail());
}

ByteBuffer decode_chain(ByteView payload, StageSpan stages) {
    if (stages.empty()) return ByteBuffer(payload.begin(), payload.end());
    const StageId head = stages.front();
    const StageSpan rest = stages.subspan(1);

    if (head == StageId::Jbe && !rest.empty()) {
        JbeSplit split;
        std::uint64_t coded_i_len = 0;
        try {
            if (payload.size() < 16) {
                throw CodecError(ErrorKind::TruncatedInput,
                                 "split stream shorter than its headers");
            }
            split.original_length = read_u64le(payload, 0);
            coded_i_len = read_u64le(payload, 8);
            if (payload.size() - 16 < coded_i_len) {
                throw CodecError(ErrorKind::TruncatedInput,
                                 "split stream shorter than its data I length declares");
            }
        } catch (const CodecError& error) {
            rethrow_with_stage(StageId::Jbe, error);
        }
        const std::size_t len = static_cast<std::size_t>(coded_i_len);
        split.data_i = decode_chain(payload.subspan(16, len), rest);
        split.data_ii = decode_chain(payload.subspan(16 + len), rest);
        try {
            return jbe_merge(split);
        } catch (const CodecError& error) {
            rethrow_with_stage(StageId::Jbe, error);
        }
    }

    ByteBuffer inner = decode_chain(payload, rest);
    try {
        return stage_decode(head, inner);
    } catch (const CodecError& error) {
        rethrow_with_stage(head, error);
    }
}

}  // namespace

StageList preset_stages(int preset) {
    switch (preset) {
        case 1: return {StageId::Rle, StageId::Ari};
        case 2: return {StageId::Bwt, StageId::Mtf, StageId::Ari};
        case 3: return {StageId::Bwt, StageId::Rle, StageId::Ari};
        case 4:
            return {StageId::Rle, StageId::Bwt, StageId::Mtf, StageId::Rle, StageId::Ari};
        case 5:
            return {StageId::Rle, StageId::Bwt, StageId::Mtf, StageId::Jbe, StageId::Ari};
    }
    throw std::invalid_argument("pipeline preset must be between 1 and 5");
}

CompressedArtifact pipeline_compress(ByteView input, const StageList& stages,
                                     const StageOptions& options) {
    CompressedArtifact artifact;
    artifact.stages = stages;
    artifact.original_length = input.size();
    artifact.checksum = crc32(input);
    artifact.payload = encode_chain(input, stages, options);
    return artifact;
}

ByteBuffer pipeline_decompress(const CompressedArtifact& artifact) {
    ByteBuffer out = decode_chain(artifact.payload, artifact.stages);
    if (out.size() != artifact.original_length) {
        throw CodecError(ErrorKind::LengthMismatch,
                         "decompressed length does not match the container header");
    }
    if (crc32(out) != artifact.checksum) {
        throw CodecError(ErrorKind::ChecksumMismatch,
                         "decompressed bytes fail the container checksum");
    }
    return out;
}

ByteBuffer container_write(const CompressedArtifact& artifact) {
    if (artifact.stages.size() > 255) {
        throw std::invalid_argument("a container holds at most 255 stages");
    }
    ByteBuffer out;
    out.push_back('J');
    out.push_back('B');
    out.push_back('E');
    out.push_back('K');
    out.push_back(1);
    out.push_back(static_cast<std::uint8_t>(artifact.stages.size()));
    for (StageId id : artifact.stages) out.push_back(static_cast<std::uint8_t>(id));
    append_u64le(out, artifact.original_length);
    append_u32le(out, artifact.checksum);
    out.insert(out.end(), artifact.payload.begin(), artifact.payload.end());
    return out;
}

CompressedArtifact container_read(ByteView bytes) {
    if (bytes.size() < 4) {
        throw CodecError(ErrorKind::TruncatedInput, "container truncated before the magic");
    }
    if (bytes[0] != 'J' || bytes[1] != 'B' || bytes[2] != 'E' || bytes[3] != 'K') {
        throw CodecError(ErrorKind::CorruptStream, "not a JBEK container");
    }
    if (bytes.size() < 6) {
        throw CodecError(ErrorKind::TruncatedInput, "container truncated in the header");
    }
    if (bytes[4] != 1) {
        throw CodecError(ErrorKind::CorruptStream,
                         "unsupported container version " + std::to_string(bytes[4]));
    }
    const std::size_t stage_count = bytes[5];
    const std::size_t header_size = 6 + stage_count + 12;
    if (bytes.size() < header_size) {
        throw CodecError(ErrorKind::TruncatedInput, "container truncated in the header");
    }

    CompressedArtifact artifact;
    artifact.stages.reserve(stage_count);
    for (std::size_t i = 0; i < stage_count; ++i) {
        const std::uint8_t wire = bytes[6 + i];
        const std::optional<StageId> id = stage_from_wire(wire);
        if (!id) {
            throw CodecError(ErrorKind::UnknownStage,
                             "unknown stage id " + std::to_string(wire));
        }
        artifact.stages.push_back(*id);
    }
    artifact.original_length = read_u64le(bytes, 6 + stage_count);
    artifact.checksum = read_u32le(bytes, 6 + stage_count + 8);
    artifact.payload.assign(bytes.begin() + static_cast<std::ptrdiff_t>(header_size),
                            bytes.end());
    return artifact;
}

std::uint64_t container_size(const CompressedArtifact& artifact) {
    return 18 + artifact.stages.size() + artifact.payload.size();
}

std::optional<double> compression_ratio(const CompressedArtifact& artifact) {
    if (artifact.original_length == 0) return std::nullopt;
    return static_cast<double>(container_size(artifact)) /
           static_cast<double>(artifact.original_length);
}

ByteBuffer compress_to_container(ByteView input, const StageList& stages,
                                 const StageOptions& options) {
    return container_write(pipeline_compress(input, stages, options));
}

ByteBuffer decompress_container(ByteView container) {
    return pipeline_decompress(container_read(container));
}

}  // namespace jbekit
