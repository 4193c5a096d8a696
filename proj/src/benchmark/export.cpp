// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "restmetrics/benchmark.hpp"

namespace restmetrics {

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string xml_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

void svg_open(std::ostringstream& out, const std::string& title) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "  <text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"16\">" << xml_escape(title) << "</text>\n";
}

void axis_label(std::ostringstream& out, double x, double y, const std::string& text, const char* anchor) {
    out << "  <text x=\"" << fixed(x) << "\" y=\"" << fixed(y) << "\" text-anchor=\"" << anchor
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << xml_escape(text) << "</text>\n";
}

Json distribution_json(const std::string& metric, const DistributionArtifact& a) {
    Json counts = Json::array();
    for (auto c : a.histogram.counts) counts.push_back(c);
    Json edges = Json::array();
    for (auto e : a.histogram.edges) edges.push_back(e);
    return {
        {"metric", metric},
        {"direction", std::string(to_string(a.direction))},
        {"sampleSize", a.sample_size},
        {"histogram", {{"edges", edges}, {"counts", counts}}},
        {"boxplot",
         {{"min", a.boxplot.min},
          {"q1", a.boxplot.q1},
          {"median", a.boxplot.median},
          {"q3", a.boxplot.q3},
          {"max", a.boxplot.max}}},
    };
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw BenchmarkError(BenchmarkErrorKind::IoFailure, "cannot create " + path.string());
    }
    out << content;
    out.flush();
    if (!out) {
        throw BenchmarkError(BenchmarkErrorKind::IoFailure, "cannot write " + path.string());
    }
}

}  // namespace

std::string render_csv(const std::vector<CorpusRow>& rows, const MetricRegistry& registry) {
    std::vector<std::string> columns;
    for (const Metric* m : registry.metrics()) columns.push_back(m->descriptor().abbreviation);
    std::ostringstream out;
    out << "file";
    for (const auto& c : columns) out << ',' << c;
    out << '\n';
    for (const auto& row : rows) {
        out << csv_field(row.source_file);
        for (const auto& c : columns) {
            out << ',';
            auto it = row.metrics.find(c);
            if (it != row.metrics.end() && it->second) out << format_number(*it->second);
        }
        out << '\n';
    }
    return out.str();
}

std::string render_histogram_svg(const std::string& metric, const DistributionArtifact& artifact) {
    std::ostringstream out;
    svg_open(out, metric + " histogram (n=" + std::to_string(artifact.sample_size) + ")");
    const auto& h = artifact.histogram;
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const double base = kTop + plot_h;
    out << "  <line x1=\"" << kLeft << "\" y1=\"" << base << "\" x2=\"" << kLeft + plot_w << "\" y2=\"" << base
        << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << base
        << "\" stroke=\"black\"/>\n";
    if (!h.counts.empty()) {
        const std::size_t peak = *std::max_element(h.counts.begin(), h.counts.end());
        const double bar_w = plot_w / static_cast<double>(h.counts.size());
        for (std::size_t i = 0; i < h.counts.size(); ++i) {
            const double bar_h = peak == 0 ? 0.0 : plot_h * static_cast<double>(h.counts[i]) / static_cast<double>(peak);
            out << "  <rect x=\"" << fixed(kLeft + bar_w * static_cast<double>(i)) << "\" y=\"" << fixed(base - bar_h)
                << "\" width=\"" << fixed(bar_w) << "\" height=\"" << fixed(bar_h)
                << "\" fill=\"steelblue\" stroke=\"white\"/>\n";
        }
        axis_label(out, kLeft, base + 18, format_number(h.edges.front()), "start");
        axis_label(out, kLeft + plot_w, base + 18, format_number(h.edges.back()), "end");
        axis_label(out, kLeft - 6, kTop + 4, std::to_string(peak), "end");
        axis_label(out, kLeft - 6, base, "0", "end");
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_boxplot_svg(const std::string& metric, const DistributionArtifact& artifact) {
    std::ostringstream out;
    svg_open(out, metric + " boxplot (n=" + std::to_string(artifact.sample_size) + ")");
    const auto& b = artifact.boxplot;
    const double plot_w = kWidth - kLeft - kRight;
    const double span = b.max - b.min;
    auto x = [&](double v) { return span > 0.0 ? kLeft + plot_w * (v - b.min) / span : kLeft + plot_w / 2.0; };
    const double mid = kTop + (kHeight - kTop - kBottom) / 2.0;
    const double half = 40.0;
    out << "  <line x1=\"" << fixed(x(b.min)) << "\" y1=\"" << fixed(mid) << "\" x2=\"" << fixed(x(b.q1))
        << "\" y2=\"" << fixed(mid) << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << fixed(x(b.q3)) << "\" y1=\"" << fixed(mid) << "\" x2=\"" << fixed(x(b.max))
        << "\" y2=\"" << fixed(mid) << "\" stroke=\"black\"/>\n";
    for (double v : {b.min, b.max}) {
        out << "  <line x1=\"" << fixed(x(v)) << "\" y1=\"" << fixed(mid - half / 2) << "\" x2=\"" << fixed(x(v))
            << "\" y2=\"" << fixed(mid + half / 2) << "\" stroke=\"black\"/>\n";
    }
    out << "  <rect x=\"" << fixed(x(b.q1)) << "\" y=\"" << fixed(mid - half) << "\" width=\""
        << fixed(x(b.q3) - x(b.q1)) << "\" height=\"" << fixed(2 * half)
        << "\" fill=\"lightsteelblue\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << fixed(x(b.median)) << "\" y1=\"" << fixed(mid - half) << "\" x2=\""
        << fixed(x(b.median)) << "\" y2=\"" << fixed(mid + half) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    const double label_y = mid + half + 36;
    axis_label(out, x(b.min), label_y, "min " + format_number(b.min), "start");
    axis_label(out, x(b.median), label_y + 14, "median " + format_number(b.median), "middle");
    axis_label(out, x(b.max), label_y, "max " + format_number(b.max), "end");
    out << "</svg>\n";
    return out.str();
}

void export_benchmark(const BenchmarkRun& run, const fs::path& out_dir) {
    std::error_code ec;
    fs::create_directories(out_dir / "plots", ec);
    if (ec) {
        throw BenchmarkError(BenchmarkErrorKind::IoFailure, "cannot create " + out_dir.string() + ": " + ec.message());
    }
    write_file(out_dir / "measurements.csv", render_csv(run.measured.rows));
    write_file(out_dir / "thresholds.json", render_thresholds(run.aggregate.thresholds));

    Json failures = Json::array();
    for (const auto& f : run.measured.failures) failures.push_back({{"file", f.source_file}, {"reason", f.reason}});
    Json retained = Json::array();
    for (const auto& r : run.retained) retained.push_back(r.source_file);
    Json skipped = Json::object();
    for (const auto& [metric, reason] : run.aggregate.skipped) skipped[metric] = reason;
    Json manifest = {
        {"filesFound", run.measured.files_found},
        {"parsed", run.measured.rows.size()},
        {"failures", failures},
        {"superseded", run.superseded},
        {"excluded", run.excluded},
        {"retained", retained},
        {"minOperations", run.options.min_operations},
        {"newestOnly", run.options.newest_only},
        {"skippedMetrics", skipped},
    };
    write_file(out_dir / "manifest.json", manifest.dump(2) + "\n");

    for (const auto& [metric, artifact] : run.aggregate.distributions) {
        write_file(out_dir / "plots" / (metric + ".json"), distribution_json(metric, artifact).dump(2) + "\n");
        write_file(out_dir / "plots" / (metric + "_histogram.svg"), render_histogram_svg(metric, artifact));
        write_file(out_dir / "plots" / (metric + "_boxplot.svg"), render_boxplot_svg(metric, artifact));
    }
}

}  // namespace restmetrics
