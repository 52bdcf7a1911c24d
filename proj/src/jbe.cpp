#include "jbekit/jbe.hpp"

#include <bit>

#include "jbekit/bitio.hpp"
#include "jbekit/error.hpp"

namespace jbekit {

JbeSplit jbe_encode_split(ByteView input) {
    JbeSplit split;
    split.original_length = input.size();
    split.data_ii.reserve((input.size() + 7) / 8);

    BitWriter bitmap;
    for (std::uint8_t byte : input) {
        if (byte != 0) {
            split.data_i.push_back(byte);
            bitmap.write_bit(1);
        } else {
            bitmap.write_bit(0);
        }
    }
    split.data_ii = bitmap.finish();
    return split;
}

ByteBuffer jbe_encode(ByteView input) {
    JbeSplit split = jbe_encode_split(input);
    ByteBuffer out;
    out.reserve(8 + split.data_i.size() + split.data_ii.size());
    append_u64le(out, split.original_length);
    out.insert(out.end(), split.data_i.begin(), split.data_i.end());
    out.insert(out.end(), split.data_ii.begin(), split.data_ii.end());
    return out;
}

ByteBuffer jbe_merge(const JbeSplit& split) {
    const std::uint64_t length = split.original_length;
    const std::uint64_t bitmap_bytes = (length + 7) / 8;
    if (split.data_ii.size() < bitmap_bytes) {
        throw CodecError(ErrorKind::TruncatedInput, "data II shorter than the bitmap requires");
    }
    if (split.data_ii.size() > bitmap_bytes) {
        throw CodecError(ErrorKind::CorruptStream, "data II longer than the bitmap requires");
    }

    ByteBuffer out;
    out.reserve(length);
    std::size_t next_nonzero = 0;
    BitReader bits(split.data_ii);
    for (std::uint64_t i = 0; i < length; ++i) {
        if (bits.read_bit()) {
            if (next_nonzero >= split.data_i.size()) {
                throw CodecError(ErrorKind::LengthMismatch,
                                 "data I exhausted before all bitmap 1-bits were consumed");
            }
            out.push_back(split.data_i[next_nonzero++]);
        } else {
            out.push_back(0);
        }
    }
    if (next_nonzero != split.data_i.size()) {
        throw CodecError(ErrorKind::LengthMismatch, "data I holds more bytes than the bitmap marks");
    }
    // Padding bits past the original length must be zero.
    if (length % 8 != 0 && bitmap_bytes > 0) {
        std::uint8_t pad_mask = static_cast<std::uint8_t>(0xFFu >> (length % 8));
        if ((split.data_ii.back() & pad_mask) != 0) {
            throw CodecError(ErrorKind::CorruptStream, "nonzero padding bits in data II");
        }
    }
    return out;
}

ByteBuffer jbe_decode(ByteView input) {
    if (input.size() < 8) {
        throw CodecError(ErrorKind::TruncatedInput, "stream shorter than its length header");
    }
    JbeSplit split;
    split.original_length = read_u64le(input, 0);
    const std::uint64_t bitmap_bytes = (split.original_length + 7) / 8;
    if (input.size() - 8 < bitmap_bytes) {
        throw CodecError(ErrorKind::TruncatedInput,
                         "stream shorter than the declared length requires");
    }
    const std::size_t data_i_len = input.size() - 8 - static_cast<std::size_t>(bitmap_bytes);
    split.data_i.assign(input.begin() + 8, input.begin() + 8 + data_i_len);
    split.data_ii.assign(input.begin() + 8 + data_i_len, input.end());
    return jbe_merge(split);
}

}  // namespace jbekit
