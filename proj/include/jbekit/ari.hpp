#pragma once

#include <array>
#include <cstdint>

#include "jbekit/bytes.hpp"

namespace jbekit {

// Adaptive order-0 frequency model over 256 byte symbols plus an explicit
// end-of-stream symbol. Every count stays >= 1 so no symbol ever has zero
// probability. Counts grow by 32 per occurrence; when the total reaches 2^16
// all counts are halved (floor, minimum 1). A Fenwick tree keeps cumulative
// lookups at O(log n).
class ByteModel {
public:
    static constexpr std::uint32_t kSymbolCount = 257;
    static constexpr std::uint32_t kEosSymbol = 256;
    static constexpr std::uint32_t kIncrement = 32;
    static constexpr std::uint32_t kMaxTotal = 1u << 16;

    ByteModel();

    struct Interval {
        std::uint32_t low = 0;   // cumulative count below the symbol
        std::uint32_t high = 0;  // low + count
        std::uint32_t total = 0;
    };

    std::uint32_t total() const { return total_; }
    Interval interval(std::uint32_t symbol) const;
    // Finds the symbol whose interval contains the scaled cumulative value.
    std::uint32_t symbol_from_cum(std::uint32_t cum, Interval& interval_out) const;
    void record(std::uint32_t symbol);

    // FNV-1a over the count array; encoder and decoder digests must match
    // after processing the same symbol sequence.
    std::uint64_t digest() const;

private:
    void rebuild_tree();

    std::array<std::uint32_t, kSymbolCount> counts_;
    std::array<std::uint32_t, kSymbolCount + 1> tree_;  // 1-based Fenwick
    std::uint32_t total_ = 0;
};

// Stream format: 8-byte original length (little-endian), then the terminated
// arithmetic code, MSB-first, zero-padded to a byte boundary. The stream is
// self-terminating via the end-of-stream symbol; the length header is a
// redundant integrity check. The decoder verifies that the code occupies
// exactly the bytes present, that padding bits are zero, and that the stream
// is byte-identical to the canonical encoding of the decoded bytes, so a
// corrupted stream either fails here or decodes to different bytes and is
// caught by the container checksum.
//
// When model_digest is non-null it receives the final model state digest.
ByteBuffer ari_encode(ByteView input, std::uint64_t* model_digest = nullptr);
ByteBuffer ari_decode(ByteView input, std::uint64_t* model_digest = nullptr);

}  // namespace jbekit
