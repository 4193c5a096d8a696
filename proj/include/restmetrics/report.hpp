// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>

namespace restmetrics {

/// One API's metadata plus its metric values, keyed by abbreviation.
/// A metric is either in `metrics` or in `omissions`, never both.
struct MeasurementReport {
    std::string api_title;
    std::string api_version;
    std::string source_format;
    std::string source_file;
    std::map<std::string, double> metrics;
    std::map<std::string, std::string> omissions;

    friend bool operator==(const MeasurementReport&, const MeasurementReport&) = default;
};

}  // namespace restmetrics
