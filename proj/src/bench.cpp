#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "jbekit/bench.hpp"

namespace jbekit::bench {

namespace {

ByteBuffer read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open corpus file " + path.string());
    }
    ByteBuffer bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return bytes;
}

}  // namespace

RatioReport run_benchmark(const Manifest& manifest, const std::vector<int>& presets,
                          const BenchOptions& options) {
    std::vector<int> ordered = presets;
    std::sort(ordered.begin(), ordered.end());
    ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());
    for (int preset : ordered) preset_stages(preset);
    if (ordered.empty()) {
        throw std::invalid_argument("benchmark needs at least one preset");
    }
    if (manifest.entries.empty()) {
        throw std::invalid_argument("benchmark needs at least one corpus file");
    }

    std::vector<ByteBuffer> files;
    files.reserve(manifest.entries.size());
    for (const ManifestEntry& entry : manifest.entries) {
        ByteBuffer bytes = read_file(manifest.root / entry.path);
        if (bytes.size() != entry.size) {
            throw std::runtime_error("corpus file " + entry.path +
                                     " does not match its manifest size");
        }
        if (bytes.empty()) {
            throw std::runtime_error("corpus file " + entry.path + " is empty");
        }
        files.push_back(std::move(bytes));
    }

    struct Task {
        std::size_t entry;
        std::size_t preset_index;
    };
    std::vector<Task> tasks;
    tasks.reserve(files.size() * ordered.size());
    for (std::size_t e = 0; e < files.size(); ++e) {
        for (std::size_t p = 0; p < ordered.size(); ++p) tasks.push_back({e, p});
    }

    std::vector<double> ratios(tasks.size(), 0.0);
    std::vector<double> seconds(tasks.size(), 0.0);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::atomic<bool> failed{false};
    std::mutex sync;
    std::exception_ptr first_error;

    auto worker = [&]() {
        for (;;) {
            const std::size_t index = next.fetch_add(1);
            if (index >= tasks.size() || failed.load()) return;
            const Task& task = tasks[index];
            try {
                const ByteBuffer& original = files[task.entry];
                const auto start = std::chrono::steady_clock::now();
                const CompressedArtifact artifact = pipeline_compress(
                    original, preset_stages(ordered[task.preset_index]), options.stage);
                const ByteBuffer container = container_write(artifact);
                const ByteBuffer restored = decompress_container(container);
                const auto stop = std::chrono::steady_clock::now();
                if (restored != original) {
                    throw std::runtime_error(
                        "round trip failed for " + manifest.entries[task.entry].path +
                        " with preset " + std::to_string(ordered[task.preset_index]));
                }
                ratios[index] = static_cast<double>(container.size()) /
                                static_cast<double>(original.size());
                seconds[index] = std::chrono::duration<double>(stop - start).count();
            } catch (...) {
                std::lock_guard<std::mutex> lock(sync);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
                return;
            }
            const std::size_t finished = done.fetch_add(1) + 1;
            if (options.progress) {
                std::lock_guard<std::mutex> lock(sync);
                options.progress(finished, tasks.size());
            }
        }
    };

    unsigned jobs = options.jobs ? options.jobs : std::thread::hardware_concurrency();
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (std::thread& thread : pool) thread.join();
    if (first_error) std::rethrow_exception(first_error);

    RatioReport report;
    for (FileType type : kAllFileTypes) {
        for (std::size_t p = 0; p < ordered.size(); ++p) {
            RatioRow row;
            row.type = type;
            row.preset = ordered[p];
            double sum = 0.0;
            for (std::size_t t = 0; t < tasks.size(); ++t) {
                if (manifest.entries[tasks[t].entry].type != type || tasks[t].preset_index != p) {
                    continue;
                }
                const double ratio = ratios[t];
                if (row.samples == 0) {
                    row.min_ratio = ratio;
                    row.max_ratio = ratio;
                } else {
                    row.min_ratio = std::min(row.min_ratio, ratio);
                    row.max_ratio = std::max(row.max_ratio, ratio);
                }
                sum += ratio;
                ++row.samples;
            }
            if (row.samples == 0) continue;
            row.mean_ratio = sum / row.samples;
            report.rows.push_back(row);
        }
    }
    for (std::size_t p = 0; p < ordered.size(); ++p) {
        double total = 0.0;
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            if (tasks[t].preset_index == p) total += seconds[t];
        }
        report.preset_seconds.emplace_back(ordered[p], total);
    }
    return report;
}

}  // namespace jbekit::bench
