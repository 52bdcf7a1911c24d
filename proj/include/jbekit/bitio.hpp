#pragma once

#include <cstdint>

#include "jbekit/bytes.hpp"
#include "jbekit/error.hpp"

namespace jbekit {

// Bit order within each byte is MSB-first: the first bit written lands in
// bit 7 of the current byte.

class BitWriter {
public:
    void write_bit(unsigned bit) {
        acc_ |= static_cast<std::uint8_t>((bit & 1u) << (7 - used_));
        if (++used_ == 8) {
            bytes_.push_back(acc_);
            acc_ = 0;
            used_ = 0;
        }
        ++count_;
    }

    std::uint64_t bit_count() const { return count_; }

    // Pads the final partial byte with 0-bits in the low-order positions.
    ByteBuffer finish() {
        if (used_ > 0) {
            bytes_.push_back(acc_);
            acc_ = 0;
            used_ = 0;
        }
        return std::move(bytes_);
    }

private:
    ByteBuffer bytes_;
    std::uint8_t acc_ = 0;
    int used_ = 0;
    std::uint64_t count_ = 0;
};

class BitReader {
public:
    explicit BitReader(ByteView data) : data_(data) {}

    std::uint64_t bits_left() const { return data_.size() * 8 - pos_; }

    unsigned read_bit() {
        if (pos_ >= data_.size() * 8) {
            throw CodecError(ErrorKind::TruncatedInput, "bit stream exhausted");
        }
        unsigned bit = (data_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
        ++pos_;
        return bit;
    }

private:
    ByteView data_;
    std::uint64_t pos_ = 0;
};

}  // namespace jbekit
