// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include "restmetrics/benchmark.hpp"

namespace restmetrics {

namespace {

constexpr std::size_t kMaxBins = 200;
constexpr std::size_t kFallbackBins = 10;

}  // namespace

double quantile_sorted(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) {
        throw std::invalid_argument("quantile of an empty sample");
    }
    p = std::clamp(p, 0.0, 1.0);
    const double h = static_cast<double>(sorted.size() - 1) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

Histogram make_histogram(const std::vector<double>& sorted) {
    Histogram h;
    if (sorted.empty()) return h;
    const double lo = sorted.front();
    double hi = sorted.back();
    const double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);

    std::size_t bins = kFallbackBins;
    if (iqr > 0.0) {
        const double width = 2.0 * iqr / std::cbrt(static_cast<double>(sorted.size()));
        const double raw = std::ceil((hi - lo) / width);
        bins = static_cast<std::size_t>(std::clamp(raw, 1.0, static_cast<double>(kMaxBins)));
    }
    double start = lo;
    if (hi == lo) {
        start = lo - 0.5;
        hi = lo + 0.5;
    }
    h.edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i) {
        h.edges[i] = start + (hi - start) * static_cast<double>(i) / static_cast<double>(bins);
    }
    h.edges.back() = hi;
    h.counts.assign(bins, 0);
    for (double v : sorted) {
        // Bins are [e_i, e_{i+1}) except the last, which also holds the maximum.
        auto it = std::upper_bound(h.edges.begin(), h.edges.end(), v);
        auto index = static_cast<std::size_t>(std::distance(h.edges.begin(), it));
        index = index == 0 ? 0 : index - 1;
        h.counts[std::min(index, bins - 1)] += 1;
    }
    return h;
}

AggregateResult aggregate(const std::vector<CorpusRow>& rows, const MetricRegistry& registry) {
    AggregateResult result;
    for (const Metric* metric : registry.metrics()) {
        const auto& d = metric->descriptor();
        std::vector<double> values;
        for (const auto& row : rows) {
            auto it = row.metrics.find(d.abbreviation);
            if (it != row.metrics.end() && it->second && std::isfinite(*it->second)) {
                values.push_back(*it->second);
            }
        }
        if (values.size() < kMinimumSamples) {
            result.skipped[d.abbreviation] = "InsufficientData: " + std::to_string(values.size()) +
                                             " values present, at least " + std::to_string(kMinimumSamples) +
                                             " required";
            continue;
        }
        std::sort(values.begin(), values.end());

        ThresholdEntry t;
        t.min = values.front();
        t.max = values.back();
        t.q1 = std::clamp(quantile_sorted(values, 0.25), t.min, t.max);
        t.q2 = std::clamp(quantile_sorted(values, 0.50), t.q1, t.max);
        t.q3 = std::clamp(quantile_sorted(values, 0.75), t.q2, t.max);
        t.direction = d.direction;
        t.sample_size = values.size();
        result.thresholds.emplace(d.abbreviation, t);

        DistributionArtifact artifact;
        artifact.direction = d.direction;
        artifact.sample_size = values.size();
        artifact.histogram = make_histogram(values);
        artifact.boxplot = {t.min, t.q1, t.q2, t.q3, t.max};
        result.distributions.emplace(d.abbreviation, std::move(artifact));
    }
    return result;
}

}  // namespace restmetrics
