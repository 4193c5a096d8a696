// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

#include "restmetrics/reporting.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace restmetrics {

using Json = nlohmann::json;

std::string_view to_string(Band band) {
    switch (band) {
        case Band::Green: return "GREEN";
        case Band::Yellow: return "YELLOW";
        case Band::Orange: return "ORANGE";
        case Band::Red: return "RED";
    }
    return "RED";
}

std::optional<Band> parse_band(std::string_view text) {
    for (Band b : {Band::Green, Band::Yellow, Band::Orange, Band::Red}) {
        if (to_string(b) == text) return b;
    }
    return std::nullopt;
}

std::string format_number(double value) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) {
        return "nan";
    }
    return std::string(buf.data(), end);
}

Band assign_band(double value, const MetricDescriptor& metric, const ThresholdTable& thresholds) {
    auto it = thresholds.find(metric.abbreviation);
    if (it == thresholds.end()) {
        throw UnknownMetricError(metric.abbreviation);
    }
    const auto& t = it->second;
    if (metric.direction == Direction::HigherBetter) {
        if (value >= t.q3) return Band::Green;
        if (value >= t.q2) return Band::Yellow;
        if (value >= t.q1) return Band::Orange;
        return Band::Red;
    }
    if (value <= t.q1) return Band::Green;
    if (value <= t.q2) return Band::Yellow;
    if (value <= t.q3) return Band::Orange;
    return Band::Red;
}

BandMap assign_bands(const MeasurementReport& report, const ThresholdTable& thresholds,
                     const MetricRegistry& registry) {
    BandMap bands;
    for (const auto& [name, value] : report.metrics) {
        const Metric* metric = registry.find(name);
        if (metric == nullptr || thresholds.find(name) == thresholds.end()) continue;
        bands[name] = assign_band(value, metric->descriptor(), thresholds);
    }
    return bands;
}

std::string render_thresholds(const ThresholdTable& table) {
    Json out = Json::object();
    for (const auto& [name, t] : table) {
        out[name] = {
            {"q1", t.q1},
            {"q2", t.q2},
            {"q3", t.q3},
            {"min", t.min},
            {"max", t.max},
            {"direction", std::string(to_string(t.direction))},
            {"sampleSize", t.sample_size},
        };
    }
    return out.dump(2) + "\n";
}

namespace {

double number_field(const Json& entry, const char* key, const std::string& metric) {
    auto it = entry.find(key);
    if (it == entry.end() || !it->is_number()) {
        throw ThresholdFormatError("threshold entry " + metric + " lacks numeric field " + key);
    }
    const double v = it->get<double>();
    if (!std::isfinite(v)) {
        throw ThresholdFormatError("threshold entry " + metric + " has non-finite " + key);
    }
    return v;
}

}  // namespace

ThresholdTable parse_thresholds(std::string_view json_text) {
    Json doc;
    try {
        doc = Json::parse(json_text);
    } catch (const Json::exception& e) {
        throw ThresholdFormatError(std::string("thresholds file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ThresholdFormatError("thresholds file must hold a JSON object");
    }
    ThresholdTable table;
    for (const auto& [name, entry] : doc.items()) {
        if (!entry.is_object()) {
            throw ThresholdFormatError("threshold entry " + name + " must be an object");
        }
        ThresholdEntry t;
        t.q1 = number_field(entry, "q1", name);
        t.q2 = number_field(entry, "q2", name);
        t.q3 = number_field(entry, "q3", name);
        if (entry.contains("min")) t.min = number_field(entry, "min", name);
        else t.min = t.q1;
        if (entry.contains("max")) t.max = number_field(entry, "max", name);
        else t.max = t.q3;
        if (auto d = entry.find("direction"); d != entry.end()) {
            auto parsed = d->is_string() ? parse_direction(d->get<std::string>()) : std::nullopt;
            if (!parsed) {
                throw ThresholdFormatError("threshold entry " + name + " has an invalid direction");
            }
            t.direction = *parsed;
        }
        if (auto s = entry.find("sampleSize"); s != entry.end()) {
            if (!s->is_number_unsigned()) {
                throw ThresholdFormatError("threshold entry " + name + " has an invalid sampleSize");
            }
            t.sample_size = s->get<std::size_t>();
        }
        if (!(t.q1 <= t.q2 && t.q2 <= t.q3)) {
            throw ThresholdFormatError("threshold entry " + name + " violates q1 <= q2 <= q3");
        }
        table.emplace(name, t);
    }
    return table;
}

std::string render_json(const MeasurementReport& report, const std::optional<BandMap>& bands) {
    Json out = Json::object();
    out["api"] = {{"title", report.api_title}, {"version", report.api_version}};
    out["format"] = report.source_format;
    out["file"] = report.source_file;
    out["metrics"] = Json::object();
    for (const auto& [name, value] : report.metrics) out["metrics"][name] = value;
    out["omissions"] = Json::object();
    for (const auto& [name, reason] : report.omissions) out["omissions"][name] = reason;
    if (bands) {
        out["bands"] = Json::object();
        for (const auto& [name, band] : *bands) out["bands"][name] = std::string(to_string(band));
    }
    return out.dump(2) + "\n";
}

namespace {

const Json& require(const Json& obj, const char* key, bool (Json::*check)() const noexcept) {
    auto it = obj.find(key);
    if (it == obj.end() || !((*it).*check)()) {
        throw std::invalid_argument(std::string("report JSON: missing or mistyped field ") + key);
    }
    return *it;
}

}  // namespace

ParsedReport parse_report_json(std::string_view json_text) {
    Json doc;
    try {
        doc = Json::parse(json_text);
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("report JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw std::invalid_argument("report JSON: top level must be an object");
    }
    ParsedReport parsed;
    auto& r = parsed.report;
    const auto& api = require(doc, "api", &Json::is_object);
    r.api_title = require(api, "title", &Json::is_string).get<std::string>();
    r.api_version = require(api, "version", &Json::is_string).get<std::string>();
    r.source_format = require(doc, "format", &Json::is_string).get<std::string>();
    r.source_file = require(doc, "file", &Json::is_string).get<std::string>();
    for (const auto& [name, value] : require(doc, "metrics", &Json::is_object).items()) {
        if (!value.is_number()) {
            throw std::invalid_argument("report JSON: metric " + name + " is not a number");
        }
        r.metrics[name] = value.get<double>();
    }
    for (const auto& [name, value] : require(doc, "omissions", &Json::is_object).items()) {
        if (!value.is_string()) {
            throw std::invalid_argument("report JSON: omission " + name + " is not text");
        }
        r.omissions[name] = value.get<std::string>();
    }
    if (doc.contains("bands")) {
        BandMap bands;
        for (const auto& [name, value] : require(doc, "bands", &Json::is_object).items()) {
            auto band = value.is_string() ? parse_band(value.get<std::string>()) : std::nullopt;
            if (!band) {
                throw std::invalid_argument("report JSON: band for " + name + " is invalid");
            }
            bands[name] = *band;
        }
        parsed.bands = std::move(bands);
    }
    return parsed;
}

namespace {

std::string display_value(double value, const MetricDescriptor* descriptor) {
    char buf[64];
    const bool whole = std::nearbyint(value) == value && std::fabs(value) < 1e15;
    if (descriptor != nullptr && descriptor->integral && whole) {
        std::snprintf(buf, sizeof buf, "%.0f", value);
    } else {
        std::snprintf(buf, sizeof buf, "%.2f", value);
    }
    return buf;
}

}  // namespace

std::string render_text(const MeasurementReport& report, const std::optional<BandMap>& bands,
                        const MetricRegistry& registry) {
    std::ostringstream out;
    out << "API      " << (report.api_title.empty() ? "(untitled)" : report.api_title);
    if (!report.api_version.empty()) out << " " << report.api_version;
    out << "\n";
    out << "Format   " << report.source_format << "\n";
    out << "File     " << report.source_file << "\n";

    if (!report.metrics.empty()) {
        out << "\n";
        char line[256];
        std::snprintf(line, sizeof line, "%-8s %12s  %-10s  %s", "METRIC", "VALUE", "PROPERTY",
                      bands ? "DIRECTION      BAND" : "DIRECTION");
        out << line << "\n";
        for (const auto& [name, value] : report.metrics) {
            const Metric* metric = registry.find(name);
            const MetricDescriptor* d = metric != nullptr ? &metric->descriptor() : nullptr;
            const std::string property = d != nullptr ? std::string(to_string(d->property)) : "-";
            const std::string direction = d != nullptr ? std::string(to_string(d->direction)) : "-";
            std::snprintf(line, sizeof line, "%-8s %12s  %-10s  %-13s", name.c_str(),
                          display_value(value, d).c_str(), property.c_str(), direction.c_str());
            std::string row = line;
            if (bands) {
                auto it = bands->find(name);
                row += "  ";
                row += it != bands->end() ? std::string(to_string(it->second)) : "-";
            }
            while (!row.empty() && row.back() == ' ') row.pop_back();
            out << row << "\n";
        }
    }

    if (!report.omissions.empty()) {
        out << "\nOmitted\n";
        for (const auto& [name, reason] : report.omissions) {
            char line[64];
            std::snprintf(line, sizeof line, "%-8s ", name.c_str());
            out << line << reason << "\n";
        }
    }
    return out.str();
}

}  // namespace restmetrics
