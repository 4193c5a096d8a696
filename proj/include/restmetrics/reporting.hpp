// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file reporting.hpp
 * @brief Threshold bands plus JSON and plain-text rendering of reports.
 */

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "restmetrics/metrics.hpp"
#include "restmetrics/report.hpp"

namespace restmetrics {

/// Ordered best to worst.
enum class Band { Green, Yellow, Orange, Red };

[[nodiscard]] std::string_view to_string(Band band);
[[nodiscard]] std::optional<Band> parse_band(std::string_view text);

struct ThresholdEntry {
    double q1{0.0};
    double q2{0.0};
    double q3{0.0};
    double min{0.0};
    double max{0.0};
    Direction direction{Direction::LowerBetter};
    std::size_t sample_size{0};

    friend bool operator==(const ThresholdEntry&, const ThresholdEntry&) = default;
};

using ThresholdTable = std::map<std::string, ThresholdEntry, std::less<>>;
using BandMap = std::map<std::string, Band>;

class UnknownMetricError : public std::out_of_range {
public:
    explicit UnknownMetricError(const std::string& abbreviation)
        : std::out_of_range("UnknownMetric: no threshold entry for " + abbreviation) {}
};

class ThresholdFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Quartile banding. Boundary values belong to the better band: for
 * lower-is-better metrics value <= q1 is GREEN, for higher-is-better
 * value >= q3 is GREEN. Throws UnknownMetricError when the table has no
 * entry for the metric.
 */
[[nodiscard]] Band assign_band(double value, const MetricDescriptor& metric, const ThresholdTable& thresholds);

/// Bands for every metric in the report that has a threshold entry.
[[nodiscard]] BandMap assign_bands(const MeasurementReport& report, const ThresholdTable& thresholds,
                                   const MetricRegistry& registry = default_registry());

/// JSON object metric -> {q1,q2,q3,min,max,direction,sampleSize}, keys sorted.
[[nodiscard]] std::string render_thresholds(const ThresholdTable& table);

/// Throws ThresholdFormatError on malformed input or q1 > q2 > q3 ordering violations.
[[nodiscard]] ThresholdTable parse_thresholds(std::string_view json_text);

[[nodiscard]] std::string render_json(const MeasurementReport& report,
                                      const std::optional<BandMap>& bands = std::nullopt);

struct ParsedReport {
    MeasurementReport report;
    std::optional<BandMap> bands;
};

/// Inverse of render_json. Throws std::invalid_argument on malformed input.
[[nodiscard]] ParsedReport parse_report_json(std::string_view json_text);

/**
 * Fixed-width table: metric, value, property, direction and band (when
 * supplied), followed by the omitted metrics and their reasons.
 */
[[nodiscard]] std::string render_text(const MeasurementReport& report,
                                      const std::optional<BandMap>& bands = std::nullopt,
                                      const MetricRegistry& registry = default_registry());

/// Shortest text that parses back to the same double ("0.1", "4", "1e-07").
[[nodiscard]] std::string format_number(double value);

}  // namespace restmetrics
