#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jbekit/bench.hpp"

namespace jbekit::bench {

namespace {

// splitmix64 finalizer; derives independent per-file seeds from the corpus seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// mt19937_64 output is pinned by the standard, and the reductions below avoid
// std distributions, so every platform generates identical corpora.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
        return lo + below(hi - lo + 1);
    }

    bool chance(std::uint64_t numer, std::uint64_t denom) { return below(denom) < numer; }

private:
    std::mt19937_64 engine_;
};

// Sparse indexed-color image: wide zero backgrounds and occasional filled
// color blocks separating small glyphs. Each image draws on its own pool of
// glyph patterns, and every glyph recurs only a handful of times.
// Backgrounds keep most of every sample zero.
void fill_bitmap8(ByteBuffer& out, std::uint64_t size, Rng& rng) {
    std::array<std::uint8_t, 20> palette;
    for (std::uint8_t& entry : palette) entry = static_cast<std::uint8_t>(rng.range(1, 255));
    std::vector<ByteBuffer> glyphs(std::max<std::uint64_t>(1, size / 128));
    for (ByteBuffer& glyph : glyphs) {
        const std::uint64_t length = rng.range(3, 6);
        for (std::uint64_t i = 0; i < length; ++i) {
            glyph.push_back(palette[rng.below(palette.size())]);
        }
    }
    while (out.size() < size) {
        const std::uint64_t zeros = rng.range(8, 40);
        for (std::uint64_t i = 0; i < zeros && out.size() < size; ++i) out.push_back(0);
        if (out.size() >= size) break;
        if (rng.chance(1, 48)) {
            const std::uint8_t color = palette[rng.below(palette.size())];
            const std::uint64_t fill = rng.range(32, 96);
            for (std::uint64_t i = 0; i < fill && out.size() < size; ++i) out.push_back(color);
            continue;
        }
        const ByteBuffer& glyph = glyphs[rng.below(glyphs.size())];
        for (std::size_t i = 0; i < glyph.size() && out.size() < size; ++i) {
            out.push_back(glyph[i]);
        }
    }
}

// Truecolor image: per-channel linear gradients folded back into range, plus
// low-amplitude noise. High local correlation, almost no exact repetition.
void fill_bitmap24(ByteBuffer& out, std::uint64_t size, Rng& rng) {
    const std::uint64_t width = 256;
    std::array<std::int64_t, 3> base, grad_x, grad_y;
    for (int c = 0; c < 3; ++c) {
        base[c] = static_cast<std::int64_t>(rng.below(256));
        grad_x[c] = static_cast<std::int64_t>(rng.range(0, 6)) - 3;
        grad_y[c] = static_cast<std::int64_t>(rng.range(0, 6)) - 3;
    }
    for (std::uint64_t pixel = 0; out.size() < size; ++pixel) {
        const std::int64_t x = static_cast<std::int64_t>(pixel % width);
        const std::int64_t y = static_cast<std::int64_t>(pixel / width);
        for (int c = 0; c < 3 && out.size() < size; ++c) {
            std::int64_t v = base[c] + (x * grad_x[c] + y * grad_y[c]) / 4;
            v += static_cast<std::int64_t>(rng.range(0, 4)) - 2;
            std::int64_t folded = ((v % 512) + 512) % 512;
            if (folded >= 256) folded = 511 - folded;
            out.push_back(static_cast<std::uint8_t>(folded));
        }
    }
}

constexpr std::string_view kTextSeed =
    "The harbor wakes before the town does. Fishing boats slip their moorings "
    "in the grey half light, engines muttering low, and the gulls lift from "
    "the breakwater in loose spirals. By the time the sun clears the headland, "
    "the first catch is already iced and stacked in pale blue crates along the "
    "quay. Old men who no longer sail walk down anyway, hands deep in their "
    "coat pockets, and read the water the way other people read the morning "
    "paper. A steady onshore breeze means the afternoon ferry will roll; a "
    "flat oily calm means fog by evening. They are rarely wrong. The chandlery "
    "opens at seven, smelling of rope and tar and fresh paint, and the owner "
    "keeps a ledger of debts that everyone honors eventually. Summer brings "
    "visitors who photograph the nets and ask if the sea is cold. The sea is "
    "always cold. When the storms come in the autumn, the whole town turns its "
    "shoulder to the wind, shutters banging, and waits with the patience of "
    "people who have measured every season against the tide table pinned by "
    "the kitchen door. Nothing here is hurried, and nothing is wasted: old "
    "sails become awnings, broken oars become fence rails, and stories grow a "
    "little longer each winter. ";

// English-like text from an order-2 character chain trained on the seed
// passage, so letter and digram statistics match real prose.
void fill_text(ByteBuffer& out, std::uint64_t size, Rng& rng) {
    std::unordered_map<std::uint32_t, std::string> successors;
    auto key_at = [](std::size_t i) {
        return (static_cast<std::uint32_t>(static_cast<std::uint8_t>(kTextSeed[i])) << 8) |
               static_cast<std::uint8_t>(kTextSeed[i + 1]);
    };
    for (std::size_t i = 0; i + 2 < kTextSeed.size(); ++i) {
        successors[key_at(i)].push_back(kTextSeed[i + 2]);
    }
    std::size_t pos = 0;
    std::uint32_t key = key_at(pos);
    while (out.size() < size) {
        auto it = successors.find(key);
        if (it == successors.end()) {
            pos = rng.below(kTextSeed.size() - 2);
            key = key_at(pos);
            continue;
        }
        const std::string& nexts = it->second;
        const char next = nexts[rng.below(nexts.size())];
        out.push_back(static_cast<std::uint8_t>(next));
        key = ((key << 8) & 0xFFFFu) | static_cast<std::uint8_t>(next);
    }
}

// Executable-like mix: instruction-shaped byte groups, ascending pointer
// tables, zero-filled padding, and NUL-separated identifiers.
void fill_binary(ByteBuffer& out, std::uint64_t size, Rng& rng) {
    constexpr std::array<std::uint8_t, 12> kOpcodes = {0x48, 0x89, 0x8B, 0x83, 0xE8, 0xC3,
                                                       0x55, 0x5D, 0x74, 0x75, 0x0F, 0x31};
    constexpr std::array<std::string_view, 8> kNames = {
        "init", "update", "render", "close", "frame_begin", "frame_end", "alloc", "free_all"};
    while (out.size() < size) {
        switch (rng.below(4)) {
            case 0: {
                const std::uint64_t count = rng.range(16, 96);
                std::uint8_t hot_reg = static_cast<std::uint8_t>(rng.below(8));
                for (std::uint64_t i = 0; i < count && out.size() < size; ++i) {
                    out.push_back(kOpcodes[rng.below(kOpcodes.size())]);
                    out.push_back(static_cast<std::uint8_t>(0xC0 | (hot_reg << 3) | rng.below(8)));
                    if (rng.chance(1, 3)) out.push_back(static_cast<std::uint8_t>(rng.below(128)));
                    if (rng.chance(1, 12)) hot_reg = static_cast<std::uint8_t>(rng.below(8));
                }
                break;
            }
            case 1: {
                std::uint64_t address = rng.below(1u << 24);
                const std::uint64_t stride = rng.range(4, 64);
                const std::uint64_t count = rng.range(8, 64);
                for (std::uint64_t i = 0; i < count && out.size() < size; ++i) {
                    append_u32le(out, static_cast<std::uint32_t>(address));
                    address += stride;
                }
                break;
            }
            case 2: {
                const std::uint64_t count = rng.range(32, 256);
                for (std::uint64_t i = 0; i < count && out.size() < size; ++i) out.push_back(0);
                break;
            }
            default: {
                const std::uint64_t count = rng.range(4, 16);
                for (std::uint64_t i = 0; i < count && out.size() < size; ++i) {
                    for (char c : kNames[rng.below(kNames.size())]) {
                        out.push_back(static_cast<std::uint8_t>(c));
                    }
                    out.push_back(0);
                }
                break;
            }
        }
    }
}

constexpr std::array<std::int16_t, 256> kSineTable = {
       0,    3,    6,    9,   12,   16,   19,   22,   25,   28,   31,   34,   37,   40,   43,   46,
      49,   51,   54,   57,   60,   63,   65,   68,   71,   73,   76,   78,   81,   83,   85,   88,
      90,   92,   94,   96,   98,  100,  102,  104,  106,  107,  109,  111,  112,  113,  115,  116,
     117,  118,  120,  121,  122,  122,  123,  124,  125,  125,  126,  126,  126,  127,  127,  127,
     127,  127,  127,  127,  126,  126,  126,  125,  125,  124,  123,  122,  122,  121,  120,  118,
     117,  116,  115,  113,  112,  111,  109,  107,  106,  104,  102,  100,   98,   96,   94,   92,
      90,   88,   85,   83,   81,   78,   76,   73,   71,   68,   65,   63,   60,   57,   54,   51,
      49,   46,   43,   40,   37,   34,   31,   28,   25,   22,   19,   16,   12,    9,    6,    3,
       0,   -3,   -6,   -9,  -12,  -16,  -19,  -22,  -25,  -28,  -31,  -34,  -37,  -40,  -43,  -46,
     -49,  -51,  -54,  -57,  -60,  -63,  -65,  -68,  -71,  -73,  -76,  -78,  -81,  -83,  -85,  -88,
     -90,  -92,  -94,  -96,  -98, -100, -102, -104, -106, -107, -109, -111, -112, -113, -115, -116,
    -117, -118, -120, -121, -122, -122, -123, -124, -125, -125, -126, -126, -126, -127, -127, -127,
    -127, -127, -127, -127, -126, -126, -126, -125, -125, -124, -123, -122, -122, -121, -120, -118,
    -117, -116, -115, -113, -112, -111, -109, -107, -106, -104, -102, -100,  -98,  -96,  -94,  -92,
     -90,  -88,  -85,  -83,  -81,  -78,  -76,  -73,  -71,  -68,  -65,  -63,  -60,  -57,  -54,  -51,
     -49,  -46,  -43,  -40,  -37,  -34,  -31,  -28,  -25,  -22,  -19,  -16,  -12,   -9,   -6,   -3,
};

// Unsigned 8-bit mono: two-oscillator tone phrases separated by exact
// mid-level silence gaps.
void fill_audio(ByteBuffer& out, std::uint64_t size, Rng& rng) {
    while (out.size() < size) {
        if (rng.chance(1, 5)) {
            const std::uint64_t gap = rng.range(64, 512);
            for (std::uint64_t i = 0; i < gap && out.size() < size; ++i) out.push_back(0x80);
            continue;
        }
        const std::uint64_t length = rng.range(256, 1024);
        const std::uint64_t f1 = rng.range(1, 12);
        const std::uint64_t f2 = rng.range(1, 12);
        const std::int64_t a1 = static_cast<std::int64_t>(rng.range(20, 60));
        const std::int64_t a2 = static_cast<std::int64_t>(rng.range(5, 25));
        const std::uint64_t phase = rng.below(256);
        for (std::uint64_t i = 0; i < length && out.size() < size; ++i) {
            const std::int64_t s1 = kSineTable[(i * f1) & 255];
            const std::int64_t s2 = kSineTable[(i * f2 + phase) & 255];
            const std::int64_t sample = 128 + (a1 * s1 + a2 * s2) / 128;
            out.push_back(static_cast<std::uint8_t>(std::clamp<std::int64_t>(sample, 0, 255)));
        }
    }
}

}  // namespace

const char* type_name(FileType type) {
    switch (type) {
        case FileType::Bitmap8: return "bitmap8";
        case FileType::Bitmap24: return "bitmap24";
        case FileType::Text: return "text";
        case FileType::Binary: return "binary";
        case FileType::Audio: return "audio";
    }
    return "?";
}

std::optional<FileType> type_from_name(std::string_view name) {
    for (FileType type : kAllFileTypes) {
        if (name == type_name(type)) return type;
    }
    return std::nullopt;
}

std::vector<std::uint64_t> default_corpus_sizes() {
    return {98304, 131072, 196608, 262144, 393216};
}

ByteBuffer generate_sample(FileType type, std::uint64_t size, std::uint64_t seed) {
    ByteBuffer out;
    out.reserve(static_cast<std::size_t>(size));
    Rng rng(seed);
    switch (type) {
        case FileType::Bitmap8: fill_bitmap8(out, size, rng); break;
        case FileType::Bitmap24: fill_bitmap24(out, size, rng); break;
        case FileType::Text: fill_text(out, size, rng); break;
        case FileType::Binary: fill_binary(out, size, rng); break;
        case FileType::Audio: fill_audio(out, size, rng); break;
    }
    out.resize(static_cast<std::size_t>(size));
    return out;
}

Manifest generate_corpus(const CorpusSpec& spec, const std::filesystem::path& dir) {
    if (spec.sizes.empty()) {
        throw std::invalid_argument("corpus spec needs at least one size");
    }
    if (spec.samples_per_size == 0) {
        throw std::invalid_argument("corpus spec needs at least one sample per size");
    }
    std::filesystem::create_directories(dir);

    Manifest manifest;
    manifest.root = dir;
    for (std::size_t type_index = 0; type_index < kAllFileTypes.size(); ++type_index) {
        const FileType type = kAllFileTypes[type_index];
        for (std::uint64_t size : spec.sizes) {
            for (std::uint32_t sample = 0; sample < spec.samples_per_size; ++sample) {
                const std::uint64_t seed =
                    mix_seed(mix_seed(mix_seed(spec.seed, type_index), size), sample);
                const ByteBuffer bytes = generate_sample(type, size, seed);
                const std::string name = std::string(type_name(type)) + "_" +
                                         std::to_string(size) + "_" + std::to_string(sample) +
                                         ".bin";
                std::ofstream file(dir / name, std::ios::binary | std::ios::trunc);
                if (!file) {
                    throw std::runtime_error("cannot write corpus file " + (dir / name).string());
                }
                file.write(reinterpret_cast<const char*>(bytes.data()),
                           static_cast<std::streamsize>(bytes.size()));
                if (!file) {
                    throw std::runtime_error("short write to corpus file " + (dir / name).string());
                }
                manifest.entries.push_back({name, type, size});
            }
        }
    }

    std::ofstream tsv(dir / "manifest.tsv", std::ios::trunc);
    if (!tsv) {
        throw std::runtime_error("cannot write manifest " + (dir / "manifest.tsv").string());
    }
    for (const ManifestEntry& entry : manifest.entries) {
        tsv << entry.path << '\t' << type_name(entry.type) << '\t' << entry.size << '\n';
    }
    return manifest;
}

Manifest load_manifest(const std::filesystem::path& manifest_file) {
    std::ifstream in(manifest_file);
    if (!in) {
        throw std::runtime_error("cannot open manifest " + manifest_file.string());
    }
    Manifest manifest;
    manifest.root = manifest_file.parent_path();
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string path, type_text, size_text;
        if (!std::getline(fields, path, '\t') || !std::getline(fields, type_text, '\t') ||
            !std::getline(fields, size_text, '\t')) {
            throw std::runtime_error("manifest line " + std::to_string(line_number) +
                                     " does not have path, type, and size");
        }
        const std::optional<FileType> type = type_from_name(type_text);
        if (!type) {
            throw std::runtime_error("manifest line " + std::to_string(line_number) +
                                     " names unknown type " + type_text);
        }
        std::uint64_t size = 0;
        try {
            size = std::stoull(size_text);
        } catch (const std::exception&) {
            throw std::runtime_error("manifest line " + std::to_string(line_number) +
                                     " has a malformed size");
        }
        manifest.entries.push_back({path, *type, size});
    }
    return manifest;
}

}  // namespace jbekit::bench
