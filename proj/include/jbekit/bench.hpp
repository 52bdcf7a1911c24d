#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jbekit/bytes.hpp"
#include "jbekit/pipeline.hpp"

namespace jbekit::bench {

enum class FileType { Bitmap8, Bitmap24, Text, Binary, Audio };

inline constexpr std::array<FileType, 5> kAllFileTypes = {
    FileType::Bitmap8, FileType::Bitmap24, FileType::Text,
    FileType::Binary, FileType::Audio,
};

const char* type_name(FileType type);
std::optional<FileType> type_from_name(std::string_view name);

struct CorpusSpec {
    std::vector<std::uint64_t> sizes;  // byte counts; each size yields samples_per_size files per type
    std::uint32_t samples_per_size = 2;
    std::uint64_t seed = 42;
};

std::vector<std::uint64_t> default_corpus_sizes();

// Pure in (type, size, seed): same arguments always give identical bytes.
ByteBuffer generate_sample(FileType type, std::uint64_t size, std::uint64_t seed);

struct ManifestEntry {
    std::string path;  // relative to the manifest directory
    FileType type = FileType::Bitmap8;
    std::uint64_t size = 0;
};

struct Manifest {
    std::filesystem::path root;
    std::vector<ManifestEntry> entries;
};

// Writes one file per (type, size, sample) plus manifest.tsv (one line per
// file: path <TAB> type <TAB> size). Rejects an empty size list.
Manifest generate_corpus(const CorpusSpec& spec, const std::filesystem::path& dir);
Manifest load_manifest(const std::filesystem::path& manifest_file);

struct RatioRow {
    FileType type = FileType::Bitmap8;
    int preset = 0;
    double mean_ratio = 0.0;
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    std::uint32_t samples = 0;
};

struct RatioReport {
    std::vector<RatioRow> rows;  // types in fixed order, presets ascending
    std::vector<std::pair<int, double>> preset_seconds;
};

struct BenchOptions {
    unsigned jobs = 0;  // 0 = hardware concurrency
    StageOptions stage;
    std::function<void(std::size_t done, std::size_t total)> progress;
};

// Compresses every manifest file with every preset, verifies the round trip,
// and aggregates per (type, preset). Any round-trip failure aborts with the
// offending file and preset named; a ratio is never recorded for a failed
// round trip.
RatioReport run_benchmark(const Manifest& manifest, const std::vector<int>& presets,
                          const BenchOptions& options = {});

// CSV: header type,preset,mean_ratio,min,max,n; ratios with 4 decimals.
std::string render_csv(const RatioReport& report);
// Markdown: one table per type plus a per-preset runtime table.
std::string render_markdown(const RatioReport& report);

}  // namespace jbekit::bench
