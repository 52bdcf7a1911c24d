#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string_view>

#include <unistd.h>

#include <CLI11.hpp>

#include "jbekit/bench.hpp"
#include "jbekit/error.hpp"
#include "jbekit/pipeline.hpp"

namespace jbekit {

namespace {

bool want_color(const std::ostream& stream) {
    if (std::getenv("JBEKIT_NO_COLOR")) return false;
    return &stream == &std::cerr && ::isatty(2);
}

void print_error(std::ostream& err, const std::string& message) {
    if (want_color(err)) {
        err << "\x1b[31merror:\x1b[0m " << message << '\n';
    } else {
        err << "error: " << message << '\n';
    }
}

ByteBuffer read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    ByteBuffer bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return bytes;
}

void write_file(const std::string& path, ByteView bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot create " + path);
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw std::runtime_error("short write to " + path);
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot create " + path);
    }
    out << text;
    if (!out) {
        throw std::runtime_error("short write to " + path);
    }
}

std::string stage_chain_text(const StageList& stages) {
    std::string text;
    for (StageId id : stages) {
        if (!text.empty()) text += '+';
        text += stage_name(id);
    }
    return text.empty() ? "none" : text;
}

std::string ratio_text(const CompressedArtifact& artifact) {
    const std::optional<double> ratio = compression_ratio(artifact);
    if (!ratio) return "n/a";
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.4f", *ratio);
    return buffer;
}

// Parsing a stage list is a usage concern; failures exit with code 2.
StageList parse_stage_list(const std::string& text) {
    StageList stages;
    std::istringstream parts(text);
    std::string part;
    while (std::getline(parts, part, ',')) {
        const std::optional<StageId> id = stage_from_name(part);
        if (!id) {
            throw CLI::ValidationError("--stages", "unknown stage name '" + part + "'");
        }
        stages.push_back(*id);
    }
    if (stages.empty()) {
        throw CLI::ValidationError("--stages", "stage list is empty");
    }
    return stages;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lossless compression toolkit built around zero-byte splitting"};
    app.name("jbekit");
    app.require_subcommand(1);

    int pipeline = 0;
    std::string stages_text;
    std::uint32_t bwt_block = kDefaultBwtBlockSize;
    std::string input_path;
    std::string output_path;

    CLI::App* compress = app.add_subcommand("compress", "Compress a file into a container");
    compress->add_option("input", input_path, "File to compress")->required();
    compress->add_option("output", output_path, "Container to write")->required();
    CLI::Option* pipeline_opt =
        compress->add_option("-p,--pipeline", pipeline, "Stage chain preset (1..5, default 5)")
            ->check(CLI::Range(1, 5));
    CLI::Option* stages_opt =
        compress->add_option("--stages", stages_text,
                             "Comma separated stage chain, e.g. rle,bwt,mtf,ari");
    pipeline_opt->excludes(stages_opt);
    stages_opt->excludes(pipeline_opt);
    compress->add_option("--bwt-block", bwt_block, "BWT block size in bytes")
        ->check(CLI::Range(std::uint32_t{1}, std::uint32_t{1} << 26));

    CLI::App* decompress = app.add_subcommand("decompress", "Restore a container to its bytes");
    decompress->add_option("input", input_path, "Container to read")->required();
    decompress->add_option("output", output_path, "File to write")->required();

    CLI::App* inspect = app.add_subcommand("inspect", "Describe a container without decoding");
    inspect->add_option("input", input_path, "Container to read")->required();

    std::string corpus_dir = "jbekit-corpus";
    std::string manifest_path;
    std::vector<std::uint64_t> sizes;
    std::uint32_t samples = 2;
    std::uint64_t seed = 42;
    std::vector<int> presets = {1, 2, 3, 4, 5};
    std::string csv_path;
    std::string markdown_path;
    unsigned jobs = 0;
    bool quiet = false;

    CLI::App* bench_cmd =
        app.add_subcommand("bench", "Generate a synthetic corpus and benchmark the presets");
    bench_cmd->add_option("--corpus-dir", corpus_dir, "Directory for generated corpus files");
    bench_cmd->add_option("--manifest", manifest_path,
                          "Existing manifest.tsv to benchmark instead of generating");
    bench_cmd->add_option("--sizes", sizes, "Sample sizes in bytes")->delimiter(',');
    bench_cmd->add_option("--samples", samples, "Samples per type and size")
        ->check(CLI::Range(std::uint32_t{1}, std::uint32_t{64}));
    bench_cmd->add_option("--seed", seed, "Corpus generator seed");
    bench_cmd->add_option("--presets", presets, "Presets to run")
        ->delimiter(',')
        ->check(CLI::Range(1, 5));
    bench_cmd->add_option("-o,--out", csv_path, "Write the CSV report here instead of stdout");
    bench_cmd->add_option("--markdown", markdown_path, "Also write a markdown report here");
    bench_cmd->add_option("-j,--jobs", jobs, "Worker threads (0 = all cores)");
    bench_cmd->add_flag("-q,--quiet", quiet, "Suppress progress output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        StageOptions options;
        options.bwt_block_size = bwt_block;

        if (app.got_subcommand(compress)) {
            StageList stages;
            if (!stages_text.empty()) {
                try {
                    stages = parse_stage_list(stages_text);
                } catch (const CLI::ParseError& e) {
                    const int code = app.exit(e, out, err);
                    return code == 0 ? 0 : 2;
                }
            } else {
                stages = preset_stages(pipeline == 0 ? 5 : pipeline);
            }
            const ByteBuffer original = read_file(input_path);
            const CompressedArtifact artifact = pipeline_compress(original, stages, options);
            const ByteBuffer container = container_write(artifact);
            write_file(output_path, container);
            out << input_path << ": " << original.size() << " -> " << container.size()
                << " bytes (ratio " << ratio_text(artifact) << ", stages "
                << stage_chain_text(stages) << ")\n";
        } else if (app.got_subcommand(decompress)) {
            const ByteBuffer container = read_file(input_path);
            const ByteBuffer restored = decompress_container(container);
            write_file(output_path, restored);
            out << output_path << ": " << restored.size() << " bytes restored\n";
        } else if (app.got_subcommand(inspect)) {
            const ByteBuffer container = read_file(input_path);
            const CompressedArtifact artifact = container_read(container);
            char checksum[16];
            std::snprintf(checksum, sizeof(checksum), "0x%08X", artifact.checksum);
            out << "file: " << input_path << '\n'
                << "stages: " << stage_chain_text(artifact.stages) << '\n'
                << "original length: " << artifact.original_length << '\n'
                << "checksum: " << checksum << '\n'
                << "payload: " << artifact.payload.size() << " bytes\n"
                << "container: " << container.size() << " bytes\n"
                << "ratio: " << ratio_text(artifact) << '\n';
        } else if (app.got_subcommand(bench_cmd)) {
            bench::Manifest manifest;
            if (!manifest_path.empty()) {
                manifest = bench::load_manifest(manifest_path);
            } else {
                bench::CorpusSpec spec;
                spec.sizes = sizes.empty() ? bench::default_corpus_sizes() : sizes;
                spec.samples_per_size = samples;
                spec.seed = seed;
                manifest = bench::generate_corpus(spec, corpus_dir);
                if (!quiet) {
                    err << "generated " << manifest.entries.size() << " corpus files under "
                        << corpus_dir << '\n';
                }
            }
            bench::BenchOptions bench_options;
            bench_options.jobs = jobs;
            bench_options.stage = options;
            if (!quiet) {
                bench_options.progress = [&err](std::size_t done, std::size_t total) {
                    err << '\r' << done << '/' << total << std::flush;
                    if (done == total) err << '\n';
                };
            }
            const bench::RatioReport report = bench::run_benchmark(manifest, presets, bench_options);
            const std::string csv = bench::render_csv(report);
            if (csv_path.empty()) {
                out << csv;
            } else {
                write_text_file(csv_path, csv);
                out << "wrote " << csv_path << '\n';
            }
            if (!markdown_path.empty()) {
                write_text_file(markdown_path, bench::render_markdown(report));
                out << "wrote " << markdown_path << '\n';
            }
        }
    } catch (const CodecError& e) {
        print_error(err, e.what());
        return 1;
    } catch (const std::exception& e) {
        print_error(err, e.what());
        return 1;
    }
    return 0;
}

}  // namespace jbekit
