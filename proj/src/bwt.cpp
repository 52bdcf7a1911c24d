#include "jbekit/bwt.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "jbekit/error.hpp"

namespace jbekit {

namespace {

// Sorts all cyclic rotations by prefix doubling with counting sorts.
// Returns the starting offsets in sorted order; identical rotations keep
// ascending offset order.
std::vector<std::uint32_t> sort_rotations(ByteView block) {
    const std::size_t n = block.size();
    std::vector<std::uint32_t> order(n), rank(n), next_order(n), next_rank(n);
    std::vector<std::uint32_t> count(std::max<std::size_t>(n, 256), 0);

    for (std::size_t i = 0; i < n; ++i) count[block[i]]++;
    for (std::size_t b = 1; b < 256; ++b) count[b] += count[b - 1];
    for (std::size_t i = n; i-- > 0;) order[--count[block[i]]] = static_cast<std::uint32_t>(i);
    rank[order[0]] = 0;
    std::uint32_t classes = 1;
    for (std::size_t i = 1; i < n; ++i) {
        if (block[order[i]] != block[order[i - 1]]) ++classes;
        rank[order[i]] = classes - 1;
    }

    for (std::size_t width = 1; width < n && classes < n; width *= 2) {
        // order shifted left by width is already sorted by the second key
        for (std::size_t i = 0; i < n; ++i) {
            next_order[i] = static_cast<std::uint32_t>((order[i] + n - width) % n);
        }
        std::fill(count.begin(), count.begin() + classes, 0);
        for (std::size_t i = 0; i < n; ++i) count[rank[next_order[i]]]++;
        for (std::size_t c = 1; c < classes; ++c) count[c] += count[c - 1];
        for (std::size_t i = n; i-- > 0;) order[--count[rank[next_order[i]]]] = next_order[i];

        next_rank[order[0]] = 0;
        std::uint32_t next_classes = 1;
        for (std::size_t i = 1; i < n; ++i) {
            std::uint32_t cur_hi = rank[order[i]];
            std::uint32_t cur_lo = rank[(order[i] + width) % n];
            std::uint32_t prev_hi = rank[order[i - 1]];
            std::uint32_t prev_lo = rank[(order[i - 1] + width) % n];
            if (cur_hi != prev_hi || cur_lo != prev_lo) ++next_classes;
            next_rank[order[i]] = next_classes - 1;
        }
        rank.swap(next_rank);
        classes = next_classes;
    }

    // Final pass: ties between identical rotations resolve by offset.
    std::fill(count.begin(), count.begin() + classes, 0);
    for (std::size_t i = 0; i < n; ++i) count[rank[i]]++;
    for (std::size_t c = 1; c < classes; ++c) count[c] += count[c - 1];
    for (std::size_t i = n; i-- > 0;) order[--count[rank[i]]] = static_cast<std::uint32_t>(i);
    return order;
}

}  // namespace

BwtBlock bwt_transform_block(ByteView block) {
    const std::size_t n = block.size();
    BwtBlock out;
    out.last_column.resize(n);
    if (n == 0) return out;

    std::vector<std::uint32_t> order = sort_rotations(block);
    for (std::size_t row = 0; row < n; ++row) {
        out.last_column[row] = block[(order[row] + n - 1) % n];
        if (order[row] == 0) out.primary_index = static_cast<std::uint32_t>(row);
    }
    return out;
}

ByteBuffer bwt_invert_block(ByteView last_column, std::uint32_t primary_index) {
    const std::size_t n = last_column.size();
    if (n == 0) return {};
    if (primary_index >= n) {
        throw CodecError(ErrorKind::CorruptStream, "primary index out of range");
    }

    // Last-first mapping: row i of the last column precedes row lf[i].
    std::array<std::uint32_t, 256> starts{};
    for (std::uint8_t byte : last_column) starts[byte]++;
    std::uint32_t running = 0;
    for (std::size_t b = 0; b < 256; ++b) {
        std::uint32_t c = starts[b];
        starts[b] = running;
        running += c;
    }
    std::vector<std::uint32_t> lf(n);
    for (std::size_t i = 0; i < n; ++i) lf[i] = starts[last_column[i]]++;

    ByteBuffer out(n);
    std::uint32_t row = primary_index;
    for (std::size_t k = n; k-- > 0;) {
        out[k] = last_column[row];
        row = lf[row];
    }
    return out;
}

ByteBuffer bwt_encode(ByteView input, std::uint32_t block_size) {
    if (block_size == 0) {
        throw std::invalid_argument("BWT block size must be at least 1");
    }
    ByteBuffer out;
    append_u32le(out, block_size);
    for (std::size_t offset = 0; offset < input.size(); offset += block_size) {
        const std::size_t len = std::min<std::size_t>(block_size, input.size() - offset);
        BwtBlock block = bwt_transform_block(input.subspan(offset, len));
        append_u32le(out, static_cast<std::uint32_t>(len));
        append_u32le(out, block.primary_index);
        out.insert(out.end(), block.last_column.begin(), block.last_column.end());
    }
    return out;
}

ByteBuffer bwt_decode(ByteView input) {
    if (input.size() < 4) {
        throw CodecError(ErrorKind::TruncatedInput, "stream shorter than its block size header");
    }
    const std::uint32_t block_size = read_u32le(input, 0);
    if (block_size == 0) {
        throw CodecError(ErrorKind::CorruptStream, "block size is zero");
    }

    ByteBuffer out;
    std::size_t cursor = 4;
    while (cursor < input.size()) {
        if (input.size() - cursor < 8) {
            throw CodecError(ErrorKind::TruncatedInput, "block header truncated");
        }
        const std::uint32_t block_length = read_u32le(input, cursor);
        const std::uint32_t primary_index = read_u32le(input, cursor + 4);
        cursor += 8;
        if (block_length == 0 || primary_index >= block_length) {
            throw CodecError(ErrorKind::CorruptStream, "primary index out of range");
        }
        if (block_length > block_size) {
            throw CodecError(ErrorKind::CorruptStream, "block longer than the declared block size");
        }
        if (input.size() - cursor < block_length) {
            throw CodecError(ErrorKind::TruncatedInput, "block payload truncated");
        }
        ByteBuffer restored = bwt_invert_block(input.subspan(cursor, block_length), primary_index);
        cursor += block_length;
        if (cursor < input.size() && block_length != block_size) {
            throw CodecError(ErrorKind::CorruptStream, "short block before the final block");
        }
        out.insert(out.end(), restored.begin(), restored.end());
    }
    return out;
}

}  // namespace jbekit
