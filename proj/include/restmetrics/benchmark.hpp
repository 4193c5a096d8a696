// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file benchmark.hpp
 * @brief Corpus pipeline: measure every description in a directory, drop
 * small APIs, derive quartile thresholds and distribution data, export.
 */

#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "restmetrics/metrics.hpp"
#include "restmetrics/reporting.hpp"

namespace restmetrics {

enum class BenchmarkErrorKind { UnreadableCorpus, EmptyCorpus, AllFiltered, IoFailure };

[[nodiscard]] std::string_view to_string(BenchmarkErrorKind kind);

class BenchmarkError : public std::runtime_error {
public:
    BenchmarkError(BenchmarkErrorKind kind, const std::string& message);
    [[nodiscard]] BenchmarkErrorKind kind() const noexcept { return kind_; }

private:
    BenchmarkErrorKind kind_;
};

struct CorpusRow {
    std::string source_file;  ///< relative to the corpus directory, '/' separated
    std::string format;
    std::string api_title;
    std::string api_version;
    std::map<std::string, std::optional<double>> metrics;  ///< nullopt = omitted

    friend bool operator==(const CorpusRow&, const CorpusRow&) = default;
};

struct CorpusFailure {
    std::string source_file;
    std::string reason;

    friend bool operator==(const CorpusFailure&, const CorpusFailure&) = default;
};

struct CorpusMeasurement {
    std::size_t files_found{0};
    std::vector<CorpusRow> rows;          ///< sorted by source_file
    std::vector<CorpusFailure> failures;  ///< sorted by source_file
};

struct CorpusOptions {
    std::size_t jobs{0};  ///< 0 picks the hardware concurrency
    const MetricRegistry* registry{nullptr};  ///< nullptr means default_registry()
};

/// Reads a whole file. Throws std::runtime_error when it cannot be read.
[[nodiscard]] std::string read_text_file(const std::filesystem::path& path);

/// Files considered part of a corpus: .json .yaml .yml .raml .wadl .xml, recursively.
[[nodiscard]] std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& corpus_dir);

/**
 * Detects, parses and measures every corpus file, possibly in parallel.
 * Throws BenchmarkError UnreadableCorpus when the directory cannot be
 * listed, EmptyCorpus when no file parses.
 */
[[nodiscard]] CorpusMeasurement measure_corpus(const std::filesystem::path& corpus_dir,
                                               const CorpusOptions& options = {});

/// Compares dotted versions chunk by chunk, numerically where both chunks are digits.
[[nodiscard]] int compare_versions(std::string_view a, std::string_view b);

/// Keeps one row per API title, the one with the highest version. Untitled rows are kept.
[[nodiscard]] std::vector<CorpusRow> keep_newest_versions(const std::vector<CorpusRow>& rows);

struct FilterResult {
    std::vector<CorpusRow> rows;
    std::size_t excluded{0};
};

/// Keeps rows whose WSIC >= min_operations. Throws BenchmarkError AllFiltered if none remain.
[[nodiscard]] FilterResult filter_rows(const std::vector<CorpusRow>& rows, std::size_t min_operations = 5);

/// Linear interpolation between closest ranks on sorted data, p in [0, 1].
[[nodiscard]] double quantile_sorted(const std::vector<double>& sorted, double p);

struct Histogram {
    std::vector<double> edges;  ///< counts.size() + 1 ascending edges
    std::vector<std::size_t> counts;
};

/// Freedman-Diaconis bin width, 10 equal bins when the IQR is zero, at most 200 bins.
[[nodiscard]] Histogram make_histogram(const std::vector<double>& sorted);

struct BoxplotSummary {
    double min{0.0};
    double q1{0.0};
    double median{0.0};
    double q3{0.0};
    double max{0.0};
};

struct DistributionArtifact {
    Direction direction{Direction::LowerBetter};
    std::size_t sample_size{0};
    Histogram histogram;
    BoxplotSummary boxplot;
};

struct AggregateResult {
    ThresholdTable thresholds;
    std::map<std::string, DistributionArtifact> distributions;
    std::map<std::string, std::string> skipped;  ///< metric -> InsufficientData reason
};

/// Metrics with fewer than this many present values get no thresholds.
inline constexpr std::size_t kMinimumSamples = 4;

[[nodiscard]] AggregateResult aggregate(const std::vector<CorpusRow>& rows,
                                        const MetricRegistry& registry = default_registry());

struct BenchmarkOptions {
    std::size_t min_operations{5};
    std::size_t jobs{0};
    bool newest_only{false};
};

struct BenchmarkRun {
    BenchmarkOptions options;
    CorpusMeasurement measured;
    std::size_t superseded{0};  ///< rows dropped by the newest-version switch
    std::size_t excluded{0};    ///< rows dropped by the operation filter
    std::vector<CorpusRow> retained;
    AggregateResult aggregate;
};

/// measure_corpus -> keep_newest_versions (optional) -> filter_rows -> aggregate.
[[nodiscard]] BenchmarkRun run_benchmark(const std::filesystem::path& corpus_dir,
                                         const BenchmarkOptions& options = {});

/// "file,APL,..." header plus one line per row; omitted metrics are empty cells.
[[nodiscard]] std::string render_csv(const std::vector<CorpusRow>& rows,
                                     const MetricRegistry& registry = default_registry());

[[nodiscard]] std::string render_histogram_svg(const std::string& metric, const DistributionArtifact& artifact);
[[nodiscard]] std::string render_boxplot_svg(const std::string& metric, const DistributionArtifact& artifact);

/**
 * Writes measurements.csv, thresholds.json, manifest.json and
 * plots/<METRIC>.json, plots/<METRIC>_histogram.svg, plots/<METRIC>_boxplot.svg.
 * Throws BenchmarkError IoFailure.
 */
void export_benchmark(const BenchmarkRun& run, const std::filesystem::path& out_dir);

}  // namespace restmetrics
