// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file metrics.hpp
 * @brief Service interface maintainability metrics over the canonical model.
 *
 * Each metric is a pure function of an ApiDescription. A metric whose
 * precondition does not hold returns an Omission instead of a value, because
 * zero is a meaningful value for most of them.
 */

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "restmetrics/model.hpp"
#include "restmetrics/report.hpp"

namespace restmetrics {

enum class MetricProperty { Complexity, Cohesion, Size };

enum class Direction { LowerBetter, HigherBetter };

[[nodiscard]] std::string_view to_string(MetricProperty property);
[[nodiscard]] std::string_view to_string(Direction direction);
[[nodiscard]] std::optional<Direction> parse_direction(std::string_view text);

struct MetricDescriptor {
    std::string abbreviation;
    std::string name;
    MetricProperty property{MetricProperty::Complexity};
    Direction direction{Direction::LowerBetter};
    bool ratio{false};     ///< value lies in [0, 1]
    bool integral{false};  ///< value is a whole number

    friend bool operator==(const MetricDescriptor&, const MetricDescriptor&) = default;
};

/// The ten built-in descriptors, sorted by abbreviation.
[[nodiscard]] const std::vector<MetricDescriptor>& builtin_descriptors();

/// Throws std::out_of_range for unknown abbreviations.
[[nodiscard]] const MetricDescriptor& builtin_descriptor(std::string_view abbreviation);

struct MetricResult {
    MetricDescriptor descriptor;
    double value{0.0};
};

enum class OmissionReason { EmptyApi, NoMessages, TooFewOperations };

[[nodiscard]] std::string_view to_string(OmissionReason reason);

struct Omission {
    MetricDescriptor descriptor;
    OmissionReason reason{OmissionReason::EmptyApi};
    std::string detail;

    /// "TooFewOperations: needs at least 2 operations"
    [[nodiscard]] std::string text() const;
};

/// Either a computed value or the reason it was omitted.
class MetricOutcome {
public:
    MetricOutcome(MetricResult result) : state_(std::move(result)) {}  // NOLINT(google-explicit-constructor)
    MetricOutcome(Omission omission) : state_(std::move(omission)) {}  // NOLINT(google-explicit-constructor)

    [[nodiscard]] bool has_value() const noexcept { return std::holds_alternative<MetricResult>(state_); }
    [[nodiscard]] const MetricDescriptor& descriptor() const;

    /// Throws std::logic_error when the metric was omitted.
    [[nodiscard]] double value() const;
    [[nodiscard]] const MetricResult& result() const;
    [[nodiscard]] const Omission& omission() const;

private:
    std::variant<MetricResult, Omission> state_;
};

struct MetricOptions {
    /// WSIC weight per operation; unset means every operation weighs 1.
    std::function<double(const Route&, const Operation&)> operation_weight;

    /// Jaccard similarity assigned to two empty token sets in LOC_MSG.
    double empty_set_similarity{1.0};
};

[[nodiscard]] MetricOutcome wsic(const ApiDescription& api, const MetricOptions& options = {});
[[nodiscard]] MetricOutcome apl(const ApiDescription& api);
[[nodiscard]] MetricOutcome lp(const ApiDescription& api);
[[nodiscard]] MetricOutcome nor(const ApiDescription& api);
[[nodiscard]] MetricOutcome brc(const ApiDescription& api);
[[nodiscard]] MetricOutcome apo(const ApiDescription& api);
[[nodiscard]] MetricOutcome dw(const ApiDescription& api);
[[nodiscard]] MetricOutcome dmr(const ApiDescription& api);
[[nodiscard]] MetricOutcome loc_msg(const ApiDescription& api, const MetricOptions& options = {});
[[nodiscard]] MetricOutcome sidc(const ApiDescription& api);

/// Extension point: implement this to add a metric to a registry.
class Metric {
public:
    virtual ~Metric() = default;
    [[nodiscard]] virtual const MetricDescriptor& descriptor() const = 0;
    [[nodiscard]] virtual MetricOutcome compute(const ApiDescription& api) const = 0;
};

class MetricRegistry {
public:
    /// Throws std::invalid_argument when the abbreviation is already registered.
    void add(std::unique_ptr<Metric> metric);

    /// Registered metrics sorted by abbreviation.
    [[nodiscard]] std::vector<const Metric*> metrics() const;
    [[nodiscard]] const Metric* find(std::string_view abbreviation) const;
    [[nodiscard]] std::size_t size() const { return metrics_.size(); }

    /// Registry holding the ten built-in metrics.
    [[nodiscard]] static MetricRegistry with_builtins(MetricOptions options = {});

private:
    std::map<std::string, std::unique_ptr<Metric>, std::less<>> metrics_;
};

/// Shared registry with the built-in metrics and default options.
[[nodiscard]] const MetricRegistry& default_registry();

/**
 * Runs every registered metric. Omitted metrics land in the report's
 * omissions with their reason; nothing is thrown for per-metric failures.
 */
[[nodiscard]] MeasurementReport measure_all(const ApiDescription& api,
                                            const MetricRegistry& registry = default_registry());

}  // namespace restmetrics
