#include <cstdio>
#include <string>

#include "jbekit/bench.hpp"

namespace jbekit::bench {

namespace {

std::string fixed(double value, int decimals) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
    return buffer;
}

}  // namespace

std::string render_csv(const RatioReport& report) {
    std::string out = "type,preset,mean_ratio,min,max,n\n";
    for (const RatioRow& row : report.rows) {
        out += type_name(row.type);
        out += ',';
        out += std::to_string(row.preset);
        out += ',';
        out += fixed(row.mean_ratio, 4);
        out += ',';
        out += fixed(row.min_ratio, 4);
        out += ',';
        out += fixed(row.max_ratio, 4);
        out += ',';
        out += std::to_string(row.samples);
        out += '\n';
    }
    return out;
}

std::string render_markdown(const RatioReport& report) {
    std::string out = "# Compression benchmark\n";
    out += "\nRatios are compressed container size over original size; lower is better.\n";
    const RatioRow* previous = nullptr;
    for (const RatioRow& row : report.rows) {
        if (!previous || previous->type != row.type) {
            out += "\n## ";
            out += type_name(row.type);
            out += "\n\n| preset | mean ratio | min | max | n |\n";
            out += "|---|---|---|---|---|\n";
        }
        out += "| ";
        out += std::to_string(row.preset);
        out += " | ";
        out += fixed(row.mean_ratio, 4);
        out += " | ";
        out += fixed(row.min_ratio, 4);
        out += " | ";
        out += fixed(row.max_ratio, 4);
        out += " | ";
        out += std::to_string(row.samples);
        out += " |\n";
        previous = &row;
    }
    if (!report.preset_seconds.empty()) {
        out += "\n## Runtime\n\nCompress plus decompress wall time summed over all files.\n";
        out += "\n| preset | seconds |\n|---|---|\n";
        for (const auto& [preset, seconds] : report.preset_seconds) {
            out += "| ";
            out += std::to_string(preset);
            out += " | ";
            out += fixed(seconds, 2);
            out += " |\n";
        }
    }
    return out;
}

}  // namespace jbekit::bench
