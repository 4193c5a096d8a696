// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

#include "restmetrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace restmetrics {

std::string_view to_string(MetricProperty property) {
    switch (property) {
        case MetricProperty::Complexity: return "COMPLEXITY";
        case MetricProperty::Cohesion: return "COHESION";
        case MetricProperty::Size: return "SIZE";
    }
    return "COMPLEXITY";
}

std::string_view to_string(Direction direction) {
    return direction == Direction::HigherBetter ? "HIGHER_BETTER" : "LOWER_BETTER";
}

std::optional<Direction> parse_direction(std::string_view text) {
    if (text == "LOWER_BETTER") return Direction::LowerBetter;
    if (text == "HIGHER_BETTER") return Direction::HigherBetter;
    return std::nullopt;
}

std::string_view to_string(OmissionReason reason) {
    switch (reason) {
        case OmissionReason::EmptyApi: return "EmptyApi";
        case OmissionReason::NoMessages: return "NoMessages";
        case OmissionReason::TooFewOperations: return "TooFewOperations";
    }
    return "EmptyApi";
}

std::string Omission::text() const {
    std::string out(to_string(reason));
    if (!detail.empty()) {
        out += ": ";
        out += detail;
    }
    return out;
}

const MetricDescriptor& MetricOutcome::descriptor() const {
    return has_value() ? std::get<MetricResult>(state_).descriptor : std::get<Omission>(state_).descriptor;
}

double MetricOutcome::value() const {
    if (!has_value()) {
        const auto& o = std::get<Omission>(state_);
        throw std::logic_error(o.descriptor.abbreviation + " was omitted (" + o.text() + ")");
    }
    return std::get<MetricResult>(state_).value;
}

const MetricResult& MetricOutcome::result() const {
    if (!has_value()) {
        throw std::logic_error(descriptor().abbreviation + " was omitted");
    }
    return std::get<MetricResult>(state_);
}

const Omission& MetricOutcome::omission() const {
    if (has_value()) {
        throw std::logic_error(descriptor().abbreviation + " has a value");
    }
    return std::get<Omission>(state_);
}

const std::vector<MetricDescriptor>& builtin_descriptors() {
    using P = MetricProperty;
    using D = Direction;
    static const std::vector<MetricDescriptor> all = {
        {"APL", "Average Path Length", P::Complexity, D::LowerBetter, false, false},
        {"APO", "Arguments per Operation", P::Complexity, D::LowerBetter, false, false},
        {"BRC", "Biggest Root Coverage", P::Complexity, D::HigherBetter, true, false},
        {"DMR", "Distinct Message Ratio", P::Complexity, D::LowerBetter, true, false},
        {"DW", "Data Weight", P::Complexity, D::LowerBetter, false, true},
        {"LOC_MSG", "Lack of Message-Level Cohesion", P::Cohesion, D::LowerBetter, true, false},
        {"LP", "Longest Path", P::Complexity, D::LowerBetter, false, true},
        {"NOR", "Number of Roots", P::Complexity, D::LowerBetter, false, true},
        {"SIDC", "Service Interface Data Cohesion", P::Cohesion, D::HigherBetter, true, false},
        {"WSIC", "Weighted Service Interface Count", P::Size, D::LowerBetter, false, true},
    };
    return all;
}

const MetricDescriptor& builtin_descriptor(std::string_view abbreviation) {
    for (const auto& d : builtin_descriptors()) {
        if (d.abbreviation == abbreviation) return d;
    }
    throw std::out_of_range("unknown metric: " + std::string(abbreviation));
}

namespace {

struct OpRef {
    const Route* route;
    const Operation* op;
};

std::vector<OpRef> operations_of(const ApiDescription& api) {
    std::vector<OpRef> out;
    for (const auto& r : api.routes) {
        for (const auto& o : r.operations) out.push_back({&r, &o});
    }
    return out;
}

MetricOutcome ok(std::string_view abbreviation, double value) {
    return MetricResult{builtin_descriptor(abbreviation), value};
}

MetricOutcome omitted(std::string_view abbreviation, OmissionReason reason, std::string detail) {
    return Omission{builtin_descriptor(abbreviation), reason, std::move(detail)};
}

MetricOutcome no_routes(std::string_view abbreviation) {
    return omitted(abbreviation, OmissionReason::EmptyApi, "API declares no routes");
}

MetricOutcome no_operations(std::string_view abbreviation) {
    return omitted(abbreviation, OmissionReason::EmptyApi, "API declares no operations");
}

// First segment of a route, with the root path represented as "/".
std::string root_of(const Route& route) {
    return route.segments.empty() ? std::string("/") : route.segments.front();
}

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b, double empty_value) {
    if (a.empty() && b.empty()) return empty_value;
    std::size_t common = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++common;
            ++ia;
            ++ib;
        }
    }
    const auto united = a.size() + b.size() - common;
    return static_cast<double>(common) / static_cast<double>(united);
}

bool intersects(const std::set<std::string>& a, const std::set<std::string>& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            return true;
        }
    }
    return false;
}

// Tokens are tab-joined; tabs cannot occur unescaped in leaf paths.
std::string token(char tag, std::string_view a, std::string_view b) {
    std::string out(1, tag);
    out += '\t';
    out += a;
    out += '\t';
    out += b;
    return out;
}

void add_leaf_tokens(std::set<std::string>& into, const std::vector<Payload>& payloads) {
    for (const auto& p : payloads) {
        if (!p.root) continue;
        for (const auto& leaf : leaf_tokens(*p.root)) {
            into.insert(token('b', leaf.path, leaf.type));
        }
    }
}

std::set<std::string> message_inputs(const Operation& op) {
    std::set<std::string> out;
    for (const auto& p : op.parameters) out.insert(token('p', p.name, p.primitive_type));
    add_leaf_tokens(out, op.request_payloads);
    return out;
}

std::set<std::string> message_outputs(const Operation& op) {
    std::set<std::string> out;
    add_leaf_tokens(out, op.response_payloads);
    return out;
}

std::set<std::string> input_types(const Operation& op) {
    std::set<std::string> out;
    for (const auto& p : op.parameters) out.insert("p\t" + p.primitive_type);
    for (const auto& p : op.request_payloads) {
        auto fp = fingerprint(p);
        if (!fp.empty()) out.insert("b\t" + fp.canonical_form);
    }
    return out;
}

std::set<std::string> output_types(const Operation& op) {
    std::set<std::string> out;
    for (const auto& p : op.response_payloads) {
        auto fp = fingerprint(p);
        if (!fp.empty()) out.insert(fp.canonical_form);
    }
    return out;
}

}  // namespace

MetricOutcome wsic(const ApiDescription& api, const MetricOptions& options) {
    double total = 0.0;
    for (const auto& [route, op] : operations_of(api)) {
        total += options.operation_weight ? options.operation_weight(*route, *op) : 1.0;
    }
    return ok("WSIC", total);
}

MetricOutcome apl(const ApiDescription& api) {
    if (api.routes.empty()) return no_routes("APL");
    double sum = 0.0;
    for (const auto& r : api.routes) sum += static_cast<double>(r.segments.size());
    return ok("APL", sum / static_cast<double>(api.routes.size()));
}

MetricOutcome lp(const ApiDescription& api) {
    if (api.routes.empty()) return no_routes("LP");
    std::size_t longest = 0;
    for (const auto& r : api.routes) longest = std::max(longest, r.segments.size());
    return ok("LP", static_cast<double>(longest));
}

MetricOutcome nor(const ApiDescription& api) {
    if (api.routes.empty()) return no_routes("NOR");
    std::set<std::string> roots;
    for (const auto& r : api.routes) roots.insert(root_of(r));
    return ok("NOR", static_cast<double>(roots.size()));
}

MetricOutcome brc(const ApiDescription& api) {
    if (api.routes.empty()) return no_routes("BRC");
    std::unordered_map<std::string, std::size_t> per_root;
    std::size_t biggest = 0;
    for (const auto& r : api.routes) biggest = std::max(biggest, ++per_root[root_of(r)]);
    return ok("BRC", static_cast<double>(biggest) / static_cast<double>(api.routes.size()));
}

MetricOutcome apo(const ApiDescription& api) {
    const auto ops = operations_of(api);
    if (ops.empty()) return no_operations("APO");
    double total = 0.0;
    for (const auto& [route, op] : ops) {
        std::size_t body = 0;
        for (const auto& p : op->request_payloads) {
            if (p.root) body = std::max(body, leaf_count(*p.root));
        }
        total += static_cast<double>(op->parameters.size() + body);
    }
    return ok("APO", total / static_cast<double>(ops.size()));
}

MetricOutcome dw(const ApiDescription& api) {
    const auto ops = operations_of(api);
    if (ops.empty()) return no_operations("DW");
    std::size_t total = 0;
    for (const auto& [route, op] : ops) {
        total += op->parameters.size();
        for (const auto* payloads : {&op->request_payloads, &op->response_payloads}) {
            for (const auto& p : *payloads) {
                if (p.root) total += node_count(*p.root);
            }
        }
    }
    return ok("DW", static_cast<double>(total));
}

MetricOutcome dmr(const ApiDescription& api) {
    std::set<StructuralFingerprint> distinct;
    std::size_t messages = 0;
    for (const auto& [route, op] : operations_of(api)) {
        for (const auto* payloads : {&op->request_payloads, &op->response_payloads}) {
            for (const auto& p : *payloads) {
                distinct.insert(fingerprint(p));
                ++messages;
            }
        }
    }
    if (messages == 0) {
        return omitted("DMR", OmissionReason::NoMessages, "API declares no request or response payloads");
    }
    return ok("DMR", static_cast<double>(distinct.size()) / static_cast<double>(messages));
}

MetricOutcome loc_msg(const ApiDescription& api, const MetricOptions& options) {
    const auto ops = operations_of(api);
    if (ops.size() < 2) {
        return omitted("LOC_MSG", OmissionReason::TooFewOperations,
                       "needs at least 2 operations, found " + std::to_string(ops.size()));
    }
    std::vector<std::set<std::string>> in;
    std::vector<std::set<std::string>> out;
    for (const auto& [route, op] : ops) {
        in.push_back(message_inputs(*op));
        out.push_back(message_outputs(*op));
    }
    double sum = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            const double s_in = jaccard(in[i], in[j], options.empty_set_similarity);
            const double s_out = jaccard(out[i], out[j], options.empty_set_similarity);
            sum += 0.5 * (s_in + s_out);
            ++pairs;
        }
    }
    const double value = 1.0 - sum / static_cast<double>(pairs);
    return ok("LOC_MSG", std::clamp(value, 0.0, 1.0));
}

MetricOutcome sidc(const ApiDescription& api) {
    const auto ops = operations_of(api);
    if (ops.empty()) return no_operations("SIDC");
    if (ops.size() == 1) return ok("SIDC", 1.0);
    std::vector<std::set<std::string>> in;
    std::vector<std::set<std::string>> out;
    for (const auto& [route, op] : ops) {
        in.push_back(input_types(*op));
        out.push_back(output_types(*op));
    }
    std::size_t shared_in = 0;
    std::size_t shared_out = 0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            if (intersects(in[i], in[j])) ++shared_in;
            if (intersects(out[i], out[j])) ++shared_out;
        }
    }
    const double n = static_cast<double>(ops.size());
    const double pairs = n * (n - 1.0) / 2.0;
    return ok("SIDC", static_cast<double>(shared_in + shared_out) / (2.0 * pairs));
}

namespace {

class BuiltinMetric final : public Metric {
public:
    using Fn = std::function<MetricOutcome(const ApiDescription&)>;

    BuiltinMetric(std::string_view abbreviation, Fn fn)
        : descriptor_(builtin_descriptor(abbreviation)), fn_(std::move(fn)) {}

    const MetricDescriptor& descriptor() const override { return descriptor_; }
    MetricOutcome compute(const ApiDescription& api) const override { return fn_(api); }

private:
    MetricDescriptor descriptor_;
    Fn fn_;
};

}  // namespace

void MetricRegistry::add(std::unique_ptr<Metric> metric) {
    if (!metric) {
        throw std::invalid_argument("null metric");
    }
    const auto& abbreviation = metric->descriptor().abbreviation;
    if (abbreviation.empty()) {
        throw std::invalid_argument("metric without abbreviation");
    }
    if (metrics_.count(abbreviation) != 0) {
        throw std::invalid_argument("metric already registered: " + abbreviation);
    }
    std::string key = abbreviation;
    metrics_.emplace(std::move(key), std::move(metric));
}

std::vector<const Metric*> MetricRegistry::metrics() const {
    std::vector<const Metric*> out;
    out.reserve(metrics_.size());
    for (const auto& [name, metric] : metrics_) out.push_back(metric.get());
    return out;
}

const Metric* MetricRegistry::find(std::string_view abbreviation) const {
    auto it = metrics_.find(abbreviation);
    return it == metrics_.end() ? nullptr : it->second.get();
}

MetricRegistry MetricRegistry::with_builtins(MetricOptions options) {
    MetricRegistry registry;
    auto add = [&](std::string_view name, BuiltinMetric::Fn fn) {
        registry.add(std::make_unique<BuiltinMetric>(name, std::move(fn)));
    };
    add("APL", [](const ApiDescription& a) { return apl(a); });
    add("APO", [](const ApiDescription& a) { return apo(a); });
    add("BRC", [](const ApiDescription& a) { return brc(a); });
    add("DMR", [](const ApiDescription& a) { return dmr(a); });
    add("DW", [](const ApiDescription& a) { return dw(a); });
    add("LOC_MSG", [options](const ApiDescription& a) { return loc_msg(a, options); });
    add("LP", [](const ApiDescription& a) { return lp(a); });
    add("NOR", [](const ApiDescription& a) { return nor(a); });
    add("SIDC", [](const ApiDescription& a) { return sidc(a); });
    add("WSIC", [options](const ApiDescription& a) { return wsic(a, options); });
    return registry;
}

const MetricRegistry& default_registry() {
    static const MetricRegistry registry = MetricRegistry::with_builtins();
    return registry;
}

MeasurementReport measure_all(const ApiDescription& api, const MetricRegistry& registry) {
    MeasurementReport report;
    report.api_title = api.title;
    report.api_version = api.version;
    report.source_format = std::string(to_string(api.source_format));
    report.source_file = api.source_file;
    for (const Metric* metric : registry.metrics()) {
        const auto& abbreviation = metric->descriptor().abbreviation;
        try {
            auto outcome = metric->compute(api);
            if (outcome.has_value()) {
                const double v = outcome.value();
                if (std::isfinite(v)) {
                    report.metrics[abbreviation] = v;
                } else {
                    report.omissions[abbreviation] = "NonFinite: metric produced a non-finite value";
                }
            } else {
                report.omissions[abbreviation] = outcome.omission().text();
            }
        } catch (const std::exception& e) {
            report.omissions[abbreviation] = std::string("MetricFailed: ") + e.what();
        }
    }
    return report;
}

}  // namespace restmetrics
