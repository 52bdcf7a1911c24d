#include "jbekit/rle.hpp"

#include "jbekit/error.hpp"

namespace jbekit {

namespace {

constexpr std::size_t kMaxTokenRun = 257;  // pair + 255 additional repeats

}  // namespace

ByteBuffer rle_encode(ByteView input) {
    ByteBuffer out;
    out.reserve(input.size());
    std::size_t i = 0;
    while (i < input.size()) {
        const std::uint8_t byte = input[i];
        std::size_t run = 1;
        while (i + run < input.size() && input[i + run] == byte) ++run;

        if (run == 1) {
            out.push_back(byte);
        } else {
            // Chunk so every chunk is a full token (>= 2 bytes): a run of n
            // always encodes to exactly 3 * ceil(n / 257) bytes.
            std::size_t rest = run;
            while (rest > 0) {
                std::size_t take = rest < kMaxTokenRun ? rest : kMaxTokenRun;
                if (rest - take == 1) --take;
                out.push_back(byte);
                out.push_back(byte);
                out.push_back(static_cast<std::uint8_t>(take - 2));
                rest -= take;
            }
        }
        i += run;
    }
    return out;
}

ByteBuffer rle_decode(ByteView input) {
    ByteBuffer out;
    out.reserve(input.size());
    std::size_t i = 0;
    while (i < input.size()) {
        const std::uint8_t byte = input[i];
        if (i + 1 < input.size() && input[i + 1] == byte) {
            if (i + 2 >= input.size()) {
                throw CodecError(ErrorKind::TruncatedInput,
                                 "run pair at end of stream is missing its count byte");
            }
            const std::size_t repeats = 2 + static_cast<std::size_t>(input[i + 2]);
            out.insert(out.end(), repeats, byte);
            i += 3;
        } else {
            out.push_back(byte);
            ++i;
        }
    }
    return out;
}

}  // namespace jbekit
