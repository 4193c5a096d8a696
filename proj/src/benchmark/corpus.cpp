// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <sstream>
#include <thread>
#include <variant>

#include "restmetrics/benchmark.hpp"
#include "restmetrics/parsers.hpp"

namespace restmetrics {

namespace fs = std::filesystem;

std::string_view to_string(BenchmarkErrorKind kind) {
    switch (kind) {
        case BenchmarkErrorKind::UnreadableCorpus: return "UnreadableCorpus";
        case BenchmarkErrorKind::EmptyCorpus: return "EmptyCorpus";
        case BenchmarkErrorKind::AllFiltered: return "AllFiltered";
        case BenchmarkErrorKind::IoFailure: return "IoFailure";
    }
    return "IoFailure";
}

BenchmarkError::BenchmarkError(BenchmarkErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

std::string read_text_file(const fs::path& path) {
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
        throw std::runtime_error(path.string() + " is a directory");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw std::runtime_error("cannot read " + path.string());
    }
    return buffer.str();
}

std::vector<fs::path> corpus_files(const fs::path& corpus_dir) {
    static const std::vector<std::string> extensions = {".json", ".yaml", ".yml", ".raml", ".wadl", ".xml"};
    std::error_code ec;
    if (!fs::is_directory(corpus_dir, ec)) {
        throw BenchmarkError(BenchmarkErrorKind::UnreadableCorpus, corpus_dir.string() + " is not a directory");
    }
    std::vector<fs::path> files;
    fs::recursive_directory_iterator it(corpus_dir, fs::directory_options::skip_permission_denied, ec);
    if (ec) {
        throw BenchmarkError(BenchmarkErrorKind::UnreadableCorpus, corpus_dir.string() + ": " + ec.message());
    }
    for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
        if (ec) {
            throw BenchmarkError(BenchmarkErrorKind::UnreadableCorpus, corpus_dir.string() + ": " + ec.message());
        }
        if (!it->is_regular_file(ec)) continue;
        std::string ext = it->path().extension().string();
        std::transform(ext.begin(), ext.end(), ext.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (std::find(extensions.begin(), extensions.end(), ext) != extensions.end()) {
            files.push_back(it->path());
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

namespace {

using Outcome = std::variant<CorpusRow, CorpusFailure>;

Outcome measure_one(const fs::path& file, const std::string& relative, const MetricRegistry& registry) {
    std::string text;
    try {
        text = read_text_file(file);
    } catch (const std::exception& e) {
        return CorpusFailure{relative, std::string("unreadable: ") + e.what()};
    }
    const auto guess = detect_format(text, file.filename().string());
    if (guess.format == DetectedFormat::Unknown) {
        return CorpusFailure{relative, "format detection failed: " + guess.confidence_reason};
    }
    ApiDescription api;
    try {
        api = parse_document(guess.format, text, relative);
    } catch (const std::exception& e) {
        return CorpusFailure{relative, e.what()};
    }
    const auto report = measure_all(api, registry);
    CorpusRow row;
    row.source_file = relative;
    row.format = report.source_format;
    row.api_title = report.api_title;
    row.api_version = report.api_version;
    for (const Metric* metric : registry.metrics()) {
        const auto& name = metric->descriptor().abbreviation;
        auto it = report.metrics.find(name);
        row.metrics[name] = it == report.metrics.end() ? std::nullopt : std::optional<double>(it->second);
    }
    return row;
}

}  // namespace

CorpusMeasurement measure_corpus(const fs::path& corpus_dir, const CorpusOptions& options) {
    const MetricRegistry& registry = options.registry != nullptr ? *options.registry : default_registry();
    const auto files = corpus_files(corpus_dir);

    std::vector<std::string> relative(files.size());
    for (std::size_t i = 0; i < files.size(); ++i) {
        relative[i] = files[i].lexically_relative(corpus_dir).generic_string();
    }

    std::vector<std::optional<Outcome>> outcomes(files.size());
    std::size_t jobs = options.jobs != 0 ? options.jobs : std::max(1U, std::thread::hardware_concurrency());
    jobs = std::min(jobs, std::max<std::size_t>(files.size(), 1));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < files.size(); i = next++) {
            try {
                outcomes[i] = measure_one(files[i], relative[i], registry);
            } catch (const std::exception& e) {
                outcomes[i] = CorpusFailure{relative[i], std::string("measurement failed: ") + e.what()};
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    CorpusMeasurement result;
    result.files_found = files.size();
    for (auto& outcome : outcomes) {
        if (auto* row = std::get_if<CorpusRow>(&*outcome)) {
            result.rows.push_back(std::move(*row));
        } else {
            result.failures.push_back(std::get<CorpusFailure>(std::move(*outcome)));
        }
    }
    auto by_file = [](const auto& a, const auto& b) { return a.source_file < b.source_file; };
    std::sort(result.rows.begin(), result.rows.end(), by_file);
    std::sort(result.failures.begin(), result.failures.end(), by_file);
    if (result.rows.empty()) {
        throw BenchmarkError(BenchmarkErrorKind::EmptyCorpus,
                             "no parsable description among " + std::to_string(files.size()) + " files in " +
                                 corpus_dir.string());
    }
    return result;
}

namespace {

std::vector<std::string> version_chunks(std::string_view v) {
    if (!v.empty() && (v.front() == 'v' || v.front() == 'V')) v.remove_prefix(1);
    std::vector<std::string> chunks;
    std::size_t i = 0;
    while (i < v.size()) {
        const bool digit = std::isdigit(static_cast<unsigned char>(v[i])) != 0;
        if (!digit && !std::isalpha(static_cast<unsigned char>(v[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < v.size() && (std::isdigit(static_cast<unsigned char>(v[j])) != 0) == digit &&
               std::isalnum(static_cast<unsigned char>(v[j]))) {
            ++j;
        }
        chunks.emplace_back(v.substr(i, j - i));
        i = j;
    }
    return chunks;
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

int compare_chunk(const std::string& a, const std::string& b) {
    if (all_digits(a) && all_digits(b)) {
        auto strip = [](const std::string& s) {
            auto nz = s.find_first_not_of('0');
            return nz == std::string::npos ? std::string("0") : s.substr(nz);
        };
        const auto x = strip(a);
        const auto y = strip(b);
        if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
        return x.compare(y) < 0 ? -1 : (x == y ? 0 : 1);
    }
    const int c = a.compare(b);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace

int compare_versions(std::string_view a, std::string_view b) {
    const auto x = version_chunks(a);
    const auto y = version_chunks(b);
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
        if (int c = compare_chunk(x[i], y[i]); c != 0) return c;
    }
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    return 0;
}

std::vector<CorpusRow> keep_newest_versions(const std::vector<CorpusRow>& rows) {
    std::map<std::string, std::size_t> newest;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& title = rows[i].api_title;
        if (title.empty()) continue;
        auto [it, inserted] = newest.emplace(title, i);
        if (!inserted && compare_versions(rows[i].api_version, rows[it->second].api_version) > 0) {
            it->second = i;
        }
    }
    std::vector<CorpusRow> kept;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& title = rows[i].api_title;
        if (title.empty() || newest.at(title) == i) kept.push_back(rows[i]);
    }
    return kept;
}

FilterResult filter_rows(const std::vector<CorpusRow>& rows, std::size_t min_operations) {
    FilterResult result;
    for (const auto& row : rows) {
        auto it = row.metrics.find("WSIC");
        const bool keep = it != row.metrics.end() && it->second &&
                          *it->second >= static_cast<double>(min_operations);
        if (keep) {
            result.rows.push_back(row);
        } else {
            ++result.excluded;
        }
    }
    if (result.rows.empty()) {
        throw BenchmarkError(BenchmarkErrorKind::AllFiltered,
                             "no API has at least " + std::to_string(min_operations) + " operations (" +
                                 std::to_string(rows.size()) + " rows)");
    }
    return result;
}

BenchmarkRun run_benchmark(const fs::path& corpus_dir, const BenchmarkOptions& options) {
    BenchmarkRun run;
    run.options = options;
    CorpusOptions corpus;
    corpus.jobs = options.jobs;
    run.measured = measure_corpus(corpus_dir, corpus);
    std::vector<CorpusRow> candidates = run.measured.rows;
    if (options.newest_only) {
        candidates = keep_newest_versions(candidates);
        run.superseded = run.measured.rows.size() - candidates.size();
    }
    auto filtered = filter_rows(candidates, options.min_operations);
    run.excluded = filtered.excluded;
    run.retained = std::move(filtered.rows);
    run.aggregate = aggregate(run.retained);
    return run;
}

}  // namespace restmetrics
