// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "restmetrics/benchmark.hpp"
#include "restmetrics/metrics.hpp"
#include "restmetrics/parsers.hpp"

namespace rmtest {

struct Seed {
    std::string name;
    std::string text;
};

/// Every cross-format fixture and every mini-corpus document.
inline std::vector<Seed> fuzz_seeds() {
    std::vector<Seed> seeds;
    const std::filesystem::path dirs[] = {
        std::filesystem::path(RESTMETRICS_TEST_DIR) / "fixtures" / "crossformat",
        std::filesystem::path(RESTMETRICS_SOURCE_DIR) / "corpus" / "mini",
    };
    for (const auto& dir : dirs) {
        for (const auto& f : restmetrics::corpus_files(dir)) {
            seeds.push_back({f.filename().string(), restmetrics::read_text_file(f)});
        }
    }
    return seeds;
}

/// Applies one to four random edits: byte flips, cuts, duplicated spans,
/// swapped lines and syntax-heavy insertions.
inline std::string mutate(std::string text, std::mt19937_64& rng) {
    static const std::array<const char*, 16> tokens = {
        "{", "}", "[", "]", ":", "\n  ", "\n", "- ", "$ref: '#/nowhere'", "\"$ref\": \"#/definitions/\"",
        "<", "/>", "</resource>", "<<item>>", "!include x.raml", "type: object\n"};
    std::uniform_int_distribution<int> edits(1, 4);
    const int n = edits(rng);
    for (int e = 0; e < n && !text.empty(); ++e) {
        std::uniform_int_distribution<std::size_t> pos(0, text.size() - 1);
        const std::size_t at = pos(rng);
        switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
            case 0:
                text[at] = static_cast<char>(std::uniform_int_distribution<int>(0, 255)(rng));
                break;
            case 1:
                text.erase(at, std::uniform_int_distribution<std::size_t>(1, 64)(rng));
                break;
            case 2: {
                const std::size_t len = std::uniform_int_distribution<std::size_t>(1, 200)(rng);
                text.insert(pos(rng), text.substr(at, len));
                break;
            }
            case 3:
                text.insert(at, tokens[std::uniform_int_distribution<std::size_t>(0, tokens.size() - 1)(rng)]);
                break;
            case 4:
                text.resize(at);
                break;
            default: {
                std::vector<std::string> lines;
                std::size_t start = 0;
                for (std::size_t i = 0; i <= text.size(); ++i) {
                    if (i == text.size() || text[i] == '\n') {
                        lines.push_back(text.substr(start, i - start));
                        start = i + 1;
                    }
                }
                std::uniform_int_distribution<std::size_t> line(0, lines.size() - 1);
                std::swap(lines[line(rng)], lines[line(rng)]);
                text.clear();
                for (std::size_t i = 0; i < lines.size(); ++i) text += (i ? "\n" : "") + lines[i];
                break;
            }
        }
    }
    return text;
}

struct FuzzTally {
    std::size_t documents{0};
    std::size_t models{0};
    std::size_t parse_errors{0};
    std::vector<std::string> violations;  ///< anything other than a valid model or a ParseError
};

/// Mutates seeds round-robin and checks every parser outcome.
inline FuzzTally run_fuzz(std::size_t documents, std::uint64_t seed) {
    using namespace restmetrics;
    FuzzTally tally;
    const auto seeds = fuzz_seeds();
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < documents; ++i) {
        const auto& base = seeds[i % seeds.size()];
        const auto text = mutate(base.text, rng);
        ++tally.documents;
        auto format = detect_format(text, base.name).format;
        if (format == DetectedFormat::Unknown) {
            // Force a parser anyway so undetectable input still reaches one.
            format = static_cast<DetectedFormat>(i % 3);
        }
        const std::string label = base.name + " #" + std::to_string(i);
        try {
            const auto model = parse_document(format, text, base.name);
            const auto problems = check_invariants(model);
            if (!problems.empty()) {
                tally.violations.push_back(label + ": invariant " + problems.front());
                continue;
            }
            (void)measure_all(model);
            ++tally.models;
        } catch (const ParseError&) {
            ++tally.parse_errors;
        } catch (const std::exception& e) {
            tally.violations.push_back(label + ": unexpected exception " + e.what());
        }
    }
    return tally;
}

}  // namespace rmtest
