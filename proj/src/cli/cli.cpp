// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

#include "restmetrics/cli.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "restmetrics/benchmark.hpp"
#include "restmetrics/metrics.hpp"
#include "restmetrics/reporting.hpp"

namespace restmetrics {

namespace {

bool write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    return static_cast<bool>(out);
}

}  // namespace

int cmd_measure(const MeasureOptions& options, std::ostream& out, std::ostream& err) {
    std::string text;
    try {
        text = read_text_file(options.input_path);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUnreadable;
    }

    std::optional<ThresholdTable> thresholds;
    if (options.thresholds_file) {
        std::string raw;
        try {
            raw = read_text_file(*options.thresholds_file);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return kExitUnreadable;
        }
        try {
            thresholds = parse_thresholds(raw);
        } catch (const ThresholdFormatError& e) {
            err << "error: " << *options.thresholds_file << ": " << e.what() << "\n";
            return kExitUsage;
        }
    }

    DetectedFormat format = options.format;
    if (format == DetectedFormat::Unknown) {
        const auto guess = detect_format(text, options.input_path);
        if (guess.format == DetectedFormat::Unknown) {
            err << "error: cannot detect the description format of " << options.input_path << " ("
                << guess.confidence_reason << "); pass --format\n";
            return kExitUndetected;
        }
        format = guess.format;
    }

    ApiDescription api;
    try {
        api = parse_document(format, text, options.input_path);
    } catch (const ParseError& e) {
        err << "error: " << options.input_path << ": " << e.what() << "\n";
        return kExitParseError;
    }

    const auto report = measure_all(api);
    std::optional<BandMap> bands;
    if (thresholds) {
        bands = assign_bands(report, *thresholds);
    }
    out << render_text(report, bands);

    if (options.json_out) {
        if (!write_text(*options.json_out, render_json(report, bands))) {
            err << "error: cannot write " << *options.json_out << "\n";
            return kExitUsage;
        }
    }
    return kExitOk;
}

int cmd_benchmark(const BenchmarkCliOptions& options, std::ostream& out, std::ostream& err) {
    BenchmarkOptions bench;
    bench.min_operations = options.min_operations;
    bench.jobs = options.jobs;
    bench.newest_only = options.newest_only;

    BenchmarkRun run;
    try {
        run = run_benchmark(options.corpus_dir, bench);
    } catch (const BenchmarkError& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == BenchmarkErrorKind::UnreadableCorpus ? kExitUnreadable : kExitNoThresholds;
    }

    try {
        export_benchmark(run, options.out_dir);
    } catch (const BenchmarkError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    out << "files found   " << run.measured.files_found << "\n";
    out << "parsed        " << run.measured.rows.size() << "\n";
    out << "failed        " << run.measured.failures.size() << "\n";
    if (options.newest_only) {
        out << "superseded    " << run.superseded << "\n";
    }
    out << "excluded      " << run.excluded << " (WSIC < " << options.min_operations << ")\n";
    out << "retained      " << run.retained.size() << "\n\n";

    char line[160];
    std::snprintf(line, sizeof line, "%-8s %6s %12s %12s %12s", "METRIC", "N", "Q1", "MEDIAN", "Q3");
    out << line << "\n";
    for (const auto& [metric, t] : run.aggregate.thresholds) {
        std::snprintf(line, sizeof line, "%-8s %6zu %12.4g %12.4g %12.4g", metric.c_str(), t.sample_size, t.q1,
                      t.q2, t.q3);
        out << line << "\n";
    }
    for (const auto& [metric, reason] : run.aggregate.skipped) {
        out << "skipped " << metric << ": " << reason << "\n";
    }
    for (const auto& f : run.measured.failures) {
        err << "warning: " << f.source_file << ": " << f.reason << "\n";
    }
    out << "\noutputs written to " << options.out_dir << "\n";

    if (run.aggregate.thresholds.empty()) {
        err << "error: no metric had enough samples for thresholds\n";
        return kExitNoThresholds;
    }
    return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maintainability metrics for OpenAPI, RAML and WADL descriptions", "restmetrics"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "restmetrics 1.0.0");

    MeasureOptions measure;
    std::string format_name = "auto";
    auto* measure_cmd = app.add_subcommand("measure", "Measure one API description");
    measure_cmd->add_option("file", measure.input_path, "Description file")->required();
    measure_cmd->add_option("--format", format_name, "Input format")
        ->check(CLI::IsMember({"auto", "openapi", "raml", "wadl"}, CLI::ignore_case));
    measure_cmd->add_option("--json", measure.json_out, "Also write the report as JSON");
    measure_cmd->add_option("--thresholds", measure.thresholds_file, "Thresholds file from `benchmark`");

    BenchmarkCliOptions bench;
    auto* bench_cmd = app.add_subcommand("benchmark", "Derive thresholds from a corpus directory");
    bench_cmd->add_option("dir", bench.corpus_dir, "Corpus directory")->required();
    bench_cmd->add_option("--out", bench.out_dir, "Output directory")->required();
    bench_cmd->add_option("--min-operations", bench.min_operations, "Drop APIs with fewer operations")
        ->check(CLI::NonNegativeNumber);
    bench_cmd->add_option("--jobs", bench.jobs, "Parallel workers (default: hardware threads)")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_flag("--newest-only", bench.newest_only, "Keep only the newest version of each API title");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    if (*measure_cmd) {
        static const std::map<std::string, DetectedFormat> formats = {
            {"auto", DetectedFormat::Unknown},
            {"openapi", DetectedFormat::OpenApi},
            {"raml", DetectedFormat::Raml},
            {"wadl", DetectedFormat::Wadl},
        };
        std::string lowered = format_name;
        for (auto& c : lowered) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        measure.format = formats.at(lowered);
        return cmd_measure(measure, out, err);
    }
    return cmd_benchmark(bench, out, err);
}

}  // namespace restmetrics
