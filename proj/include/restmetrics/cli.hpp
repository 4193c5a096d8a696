// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cli.hpp
 * @brief `measure` and `benchmark` subcommands, callable without a process.
 *
 * Exit codes:
 *   0 success
 *   1 usage error or any other failure (e.g. unwritable output)
 *   2 unreadable input file, thresholds file or corpus directory
 *   3 format detection failed
 *   4 parse error
 *   5 no thresholds could be produced (empty corpus, everything filtered)
 */

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "restmetrics/parsers.hpp"

namespace restmetrics {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUnreadable = 2;
inline constexpr int kExitUndetected = 3;
inline constexpr int kExitParseError = 4;
inline constexpr int kExitNoThresholds = 5;

struct MeasureOptions {
    std::string input_path;
    DetectedFormat format{DetectedFormat::Unknown};  ///< Unknown means auto-detect
    std::optional<std::string> json_out;
    std::optional<std::string> thresholds_file;
};

struct BenchmarkCliOptions {
    std::string corpus_dir;
    std::string out_dir;
    std::size_t min_operations{5};
    std::size_t jobs{0};  ///< 0 picks the hardware concurrency
    bool newest_only{false};
};

int cmd_measure(const MeasureOptions& options, std::ostream& out, std::ostream& err);
int cmd_benchmark(const BenchmarkCliOptions& options, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and dispatches to a subcommand.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace restmetrics
