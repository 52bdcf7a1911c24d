#include "jbekit/ari.hpp"

#include <algorithm>

#include "jbekit/bitio.hpp"
#include "jbekit/error.hpp"

namespace jbekit {

namespace {

constexpr std::uint64_t kHalf = 0x80000000ull;
constexpr std::uint64_t kQuarter = 0x40000000ull;
constexpr std::uint64_t kThreeQuarters = 0xC0000000ull;
constexpr std::uint64_t kCodeMax = 0xFFFFFFFFull;
constexpr int kCodeBits = 32;

// The terminated code is exactly (renormalization shifts + 2) bits long, so
// after the code the decoder sees at most 30 zero-filled bits before the
// stream must have ended.
constexpr std::uint64_t kMaxFill = 30;

constexpr std::size_t kReserveCap = std::size_t{1} << 20;

inline std::uint32_t lowbit(std::uint32_t i) { return i & (~i + 1u); }

}  // namespace

ByteModel::ByteModel() {
    counts_.fill(1);
    total_ = kSymbolCount;
    rebuild_tree();
}

void ByteModel::rebuild_tree() {
    tree_[0] = 0;
    for (std::uint32_t i = 1; i <= kSymbolCount; ++i) tree_[i] = counts_[i - 1];
    for (std::uint32_t i = 1; i <= kSymbolCount; ++i) {
        std::uint32_t parent = i + lowbit(i);
        if (parent <= kSymbolCount) tree_[parent] += tree_[i];
    }
}

ByteModel::Interval ByteModel::interval(std::uint32_t symbol) const {
    std::uint32_t low = 0;
    for (std::uint32_t i = symbol; i > 0; i -= lowbit(i)) low += tree_[i];
    return {low, low + counts_[symbol], total_};
}

std::uint32_t ByteModel::symbol_from_cum(std::uint32_t cum, Interval& interval_out) const {
    std::uint32_t pos = 0;
    std::uint32_t remaining = cum;
    for (std::uint32_t step = 256; step > 0; step >>= 1) {
        std::uint32_t next = pos + step;
        if (next <= kSymbolCount && tree_[next] <= remaining) {
            pos = next;
            remaining -= tree_[next];
        }
    }
    interval_out.low = cum - remaining;
    interval_out.high = interval_out.low + counts_[pos];
    interval_out.total = total_;
    return pos;
}

void ByteModel::record(std::uint32_t symbol) {
    counts_[symbol] += kIncrement;
    total_ += kIncrement;
    for (std::uint32_t i = symbol + 1; i <= kSymbolCount; i += lowbit(i)) tree_[i] += kIncrement;
    if (total_ < kMaxTotal) return;
    total_ = 0;
    for (std::uint32_t& count : counts_) {
        count = std::max(1u, count / 2);
        total_ += count;
    }
    rebuild_tree();
}

std::uint64_t ByteModel::digest() const {
    std::uint64_t hash = 14695981039346656037ull;
    for (std::uint32_t count : counts_) {
        for (int i = 0; i < 4; ++i) {
            hash ^= (count >> (8 * i)) & 0xFFu;
            hash *= 1099511628211ull;
        }
    }
    return hash;
}

ByteBuffer ari_encode(ByteView input, std::uint64_t* model_digest) {
    ByteModel model;
    BitWriter writer;
    std::uint64_t low = 0;
    std::uint64_t high = kCodeMax;
    std::uint64_t pending = 0;

    auto emit = [&](unsigned bit) {
        writer.write_bit(bit);
        for (; pending > 0; --pending) writer.write_bit(bit ^ 1u);
    };

    auto encode_symbol = [&](std::uint32_t symbol) {
        const ByteModel::Interval iv = model.interval(symbol);
        const std::uint64_t range = high - low + 1;
        high = low + range * iv.high / iv.total - 1;
        low = low + range * iv.low / iv.total;
        for (;;) {
            if (high < kHalf) {
                emit(0);
            } else if (low >= kHalf) {
                emit(1);
                low -= kHalf;
                high -= kHalf;
            } else if (low >= kQuarter && high < kThreeQuarters) {
                ++pending;
                low -= kQuarter;
                high -= kQuarter;
            } else {
                break;
            }
            low <<= 1;
            high = (high << 1) | 1;
        }
        model.record(symbol);
    };

    for (std::uint8_t byte : input) encode_symbol(byte);
    encode_symbol(ByteModel::kEosSymbol);

    ++pending;
    emit(low < kQuarter ? 0 : 1);

    ByteBuffer out;
    append_u64le(out, input.size());
    ByteBuffer code = writer.finish();
    out.insert(out.end(), code.begin(), code.end());
    if (model_digest) *model_digest = model.digest();
    return out;
}

ByteBuffer ari_decode(ByteView input, std::uint64_t* model_digest) {
    if (input.size() < 8) {
        throw CodecError(ErrorKind::TruncatedInput, "stream shorter than its length header");
    }
    const std::uint64_t expected = read_u64le(input, 0);
    const ByteView code = input.subspan(8);
    const std::uint64_t code_bits = code.size() * 8;

    BitReader reader(code);
    std::uint64_t filled = 0;
    auto next_bit = [&]() -> unsigned {
        if (reader.bits_left() > 0) return reader.read_bit();
        if (++filled > kMaxFill) {
            throw CodecError(ErrorKind::TruncatedInput,
                             "arithmetic code exhausted before the end-of-stream symbol");
        }
        return 0;
    };

    std::uint64_t low = 0;
    std::uint64_t high = kCodeMax;
    std::uint64_t value = 0;
    for (int i = 0; i < kCodeBits; ++i) value = (value << 1) | next_bit();

    ByteModel model;
    ByteBuffer out;
    out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(expected, kReserveCap)));
    std::uint64_t shifts = 0;

    for (;;) {
        const std::uint64_t range = high - low + 1;
        const std::uint32_t cum =
            static_cast<std::uint32_t>(((value - low + 1) * model.total() - 1) / range);
        ByteModel::Interval iv;
        const std::uint32_t symbol = model.symbol_from_cum(cum, iv);
        high = low + range * iv.high / iv.total - 1;
        low = low + range * iv.low / iv.total;
        for (;;) {
            if (high < kHalf) {
            } else if (low >= kHalf) {
                low -= kHalf;
                high -= kHalf;
                value -= kHalf;
            } else if (low >= kQuarter && high < kThreeQuarters) {
                low -= kQuarter;
                high -= kQuarter;
                value -= kQuarter;
            } else {
                break;
            }
            low <<= 1;
            high = (high << 1) | 1;
            value = (value << 1) | next_bit();
            ++shifts;
        }
        model.record(symbol);
        if (symbol == ByteModel::kEosSymbol) break;
        out.push_back(static_cast<std::uint8_t>(symbol));
        if (out.size() > expected) {
            throw CodecError(ErrorKind::LengthMismatch,
                             "decoded length exceeds the length header");
        }
    }

    if (out.size() != expected) {
        throw CodecError(ErrorKind::LengthMismatch,
                         "decoded length falls short of the length header");
    }

    const std::uint64_t used_bits = shifts + 2;
    if (code_bits < used_bits) {
        throw CodecError(ErrorKind::TruncatedInput, "code stream shorter than the code requires");
    }
    const std::uint64_t pad = code_bits - used_bits;
    if (pad >= 8) {
        throw CodecError(ErrorKind::CorruptStream, "trailing bytes after the code");
    }
    if (pad > 0) {
        const std::uint8_t mask = static_cast<std::uint8_t>((1u << pad) - 1);
        if (code.back() & mask) {
            throw CodecError(ErrorKind::CorruptStream, "nonzero padding bits after the code");
        }
    }

    // The encoder is deterministic, so a healthy stream is byte-identical to
    // the re-encoding of its own output. This rejects bit flips that happen to
    // decode to the same bytes.
    const ByteBuffer canonical = ari_encode(out);
    if (canonical.size() != input.size() ||
        !std::equal(canonical.begin(), canonical.end(), input.begin())) {
        throw CodecError(ErrorKind::CorruptStream,
                         "code differs from the canonical encoding of its output");
    }

    if (model_digest) *model_digest = model.digest();
    return out;
}

}  // namespace jbekit
