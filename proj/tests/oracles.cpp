#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace jbekit::oracle {

ByteBuffer jbe_reference(ByteView input) {
    ByteBuffer data_i;
    std::vector<int> bits;
    for (std::uint8_t byte : input) {
        if (byte != 0) {
            data_i.push_back(byte);
            bits.push_back(1);
        } else {
            bits.push_back(0);
        }
    }
    while (bits.size() % 8 != 0) bits.push_back(0);

    ByteBuffer out;
    std::uint64_t length = input.size();
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(length >> (8 * i)));
    out.insert(out.end(), data_i.begin(), data_i.end());
    for (std::size_t i = 0; i < bits.size(); i += 8) {
        int value = 0;
        for (int b = 0; b < 8; ++b) value = value * 2 + bits[i + b];
        out.push_back(static_cast<std::uint8_t>(value));
    }
    return out;
}

ByteBuffer rle_reference(ByteView input) {
    ByteBuffer out;
    std::size_t i = 0;
    while (i < input.size()) {
        std::size_t run = 1;
        while (i + run < input.size() && input[i + run] == input[i]) ++run;
        if (run == 1) {
            out.push_back(input[i]);
            ++i;
            continue;
        }
        std::size_t left = run;
        while (left > 0) {
            std::size_t take = std::min<std::size_t>(left, 257);
            if (left - take == 1) --take;
            out.push_back(input[i]);
            out.push_back(input[i]);
            out.push_back(static_cast<std::uint8_t>(take - 2));
            left -= take;
        }
        i += run;
    }
    return out;
}

BwtReference bwt_reference(ByteView block) {
    const std::size_t n = block.size();
    std::vector<ByteBuffer> rotations;
    rotations.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        ByteBuffer rotation;
        rotation.reserve(n);
        for (std::size_t i = 0; i < n; ++i) rotation.push_back(block[(r + i) % n]);
        rotations.push_back(std::move(rotation));
    }
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return rotations[a] < rotations[b];
    });

    BwtReference out;
    for (std::size_t row = 0; row < n; ++row) {
        out.last_column.push_back(rotations[order[row]].back());
        if (order[row] == 0) out.primary_index = static_cast<std::uint32_t>(row);
    }
    return out;
}

ByteBuffer mtf_reference(ByteView input) {
    std::vector<std::uint8_t> table(256);
    std::iota(table.begin(), table.end(), 0);
    ByteBuffer out;
    for (std::uint8_t byte : input) {
        const auto it = std::find(table.begin(), table.end(), byte);
        const auto index = static_cast<std::uint8_t>(it - table.begin());
        out.push_back(index);
        table.erase(it);
        table.insert(table.begin(), byte);
    }
    return out;
}

}  // namespace jbekit::oracle
