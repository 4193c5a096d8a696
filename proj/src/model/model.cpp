// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

#include "restmetrics/model.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <tuple>
#include <utility>

namespace restmetrics {

std::string_view to_string(SourceFormat format) {
    switch (format) {
        case SourceFormat::OpenApi: return "OPENAPI";
        case SourceFormat::Raml: return "RAML";
        case SourceFormat::Wadl: return "WADL";
    }
    return "UNKNOWN";
}

std::string_view to_string(HttpVerb verb) {
    switch (verb) {
        case HttpVerb::Get: return "GET";
        case HttpVerb::Post: return "POST";
        case HttpVerb::Put: return "PUT";
        case HttpVerb::Delete: return "DELETE";
        case HttpVerb::Patch: return "PATCH";
        case HttpVerb::Head: return "HEAD";
        case HttpVerb::Options: return "OPTIONS";
    }
    return "GET";
}

std::string_view to_string(ParameterLocation location) {
    switch (location) {
        case ParameterLocation::Path: return "PATH";
        case ParameterLocation::Query: return "QUERY";
        case ParameterLocation::Header: return "HEADER";
        case ParameterLocation::Cookie: return "COOKIE";
        case ParameterLocation::Matrix: return "MATRIX";
        case ParameterLocation::Other: return "OTHER";
    }
    return "OTHER";
}

std::string_view to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::Object: return "object";
        case NodeKind::Array: return "array";
        case NodeKind::Primitive: return "primitive";
        case NodeKind::ReferenceCycle: return "cycle";
    }
    return "primitive";
}

namespace {

std::string lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// Escapes characters that carry meaning inside property paths and
// fingerprint lines so distinct trees never serialize identically.
std::string escape_name(std::string_view name) {
    std::string out;
    out.reserve(name.size());
    for (char c : name) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '/': out += "\\/"; break;
            case '[': out += "\\["; break;
            case ']': out += "\\]"; break;
            case '\t': out += "\\t"; break;
            case '\n': out += "\\n"; break;
            default: out += c;
        }
    }
    return out;
}

std::string child_path(const std::string& parent_path, const DataNode& parent,
                       const DataNode& child) {
    if (parent.kind == NodeKind::Array) {
        return parent_path + "[]";
    }
    return parent_path + "/" + escape_name(child.name);
}

template <typename Visitor>
void walk(const DataNode& node, const std::string& path, Visitor&& visit) {
    visit(node, path);
    for (const auto& child : node.children) {
        walk(child, child_path(path, node, child), visit);
    }
}

}  // namespace

std::optional<HttpVerb> parse_verb(std::string_view text) {
    static const std::map<std::string, HttpVerb, std::less<>> verbs{
        {"get", HttpVerb::Get},       {"post", HttpVerb::Post},
        {"put", HttpVerb::Put},       {"delete", HttpVerb::Delete},
        {"patch", HttpVerb::Patch},   {"head", HttpVerb::Head},
        {"options", HttpVerb::Options},
    };
    auto it = verbs.find(lower(text));
    if (it == verbs.end()) {
        return std::nullopt;
    }
    return it->second;
}

DataNode DataNode::primitive(std::string name, std::string type) {
    return DataNode{std::move(name), NodeKind::Primitive, std::move(type), {}};
}

DataNode DataNode::object(std::string name, std::vector<DataNode> children) {
    return DataNode{std::move(name), NodeKind::Object, std::nullopt, std::move(children)};
}

DataNode DataNode::array(std::string name, DataNode item) {
    DataNode node{std::move(name), NodeKind::Array, std::nullopt, {}};
    node.children.push_back(std::move(item));
    return node;
}

DataNode DataNode::cycle(std::string name) {
    return DataNode{std::move(name), NodeKind::ReferenceCycle, std::nullopt, {}};
}

std::vector<std::string> normalize_path(std::string_view raw_path, std::string_view base_path) {
    auto split = [](std::string_view text) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find('/', start);
            if (end == std::string_view::npos) {
                end = text.size();
            }
            if (end > start) {
                parts.emplace_back(text.substr(start, end - start));
            }
            start = end + 1;
        }
        return parts;
    };

    auto segments = split(raw_path);
    const auto base = split(base_path);
    if (!base.empty() && base.size() <= segments.size() &&
        std::equal(base.begin(), base.end(), segments.begin())) {
        segments.erase(segments.begin(), segments.begin() + static_cast<std::ptrdiff_t>(base.size()));
    }
    return segments;
}

std::string join_segments(const std::vector<std::string>& segments) {
    if (segments.empty()) {
        return "/";
    }
    std::string out;
    for (const auto& segment : segments) {
        out += '/';
        out += segment;
    }
    return out;
}

std::string normalize_type_token(std::string_view type_name) {
    auto name = lower(type_name);
    if (auto colon = name.rfind(':'); colon != std::string::npos) {
        name = name.substr(colon + 1);  // xs:int, xsd:string
    }
    static const std::map<std::string, std::string, std::less<>> tokens{
        {"string", "string"},
        {"str", "string"},
        {"text", "string"},
        {"char", "string"},
        {"uuid", "string"},
        {"password", "string"},
        {"date", "string"},
        {"date-time", "string"},
        {"datetime", "string"},
        {"date-only", "string"},
        {"time-only", "string"},
        {"datetime-only", "string"},
        {"time", "string"},
        {"duration", "string"},
        {"anyuri", "string"},
        {"token", "string"},
        {"normalizedstring", "string"},
        {"qname", "string"},
        {"base64binary", "string"},
        {"hexbinary", "string"},
        {"integer", "integer"},
        {"int", "integer"},
        {"int32", "integer"},
        {"int64", "integer"},
        {"long", "integer"},
        {"short", "integer"},
        {"byte", "integer"},
        {"unsignedint", "integer"},
        {"unsignedlong", "integer"},
        {"unsignedshort", "integer"},
        {"unsignedbyte", "integer"},
        {"positiveinteger", "integer"},
        {"negativeinteger", "integer"},
        {"nonnegativeinteger", "integer"},
        {"nonpositiveinteger", "integer"},
        {"number", "number"},
        {"float", "number"},
        {"double", "number"},
        {"decimal", "number"},
        {"boolean", "boolean"},
        {"bool", "boolean"},
        {"file", "file"},
        {"binary", "file"},
    };
    auto it = tokens.find(name);
    return it == tokens.end() ? std::string("other") : it->second;
}

std::size_t leaf_count(const DataNode& node) {
    std::size_t count = 0;
    walk(node, "", [&](const DataNode& n, const std::string&) {
        if (n.kind == NodeKind::Primitive || n.kind == NodeKind::ReferenceCycle) {
            ++count;
        }
    });
    return count;
}

std::size_t node_count(const DataNode& node) {
    std::size_t count = 0;
    walk(node, "", [&](const DataNode&, const std::string&) { ++count; });
    return count;
}

std::vector<LeafToken> leaf_tokens(const DataNode& node) {
    std::vector<LeafToken> tokens;
    walk(node, "", [&](const DataNode& n, const std::string& path) {
        if (n.kind == NodeKind::Primitive) {
            tokens.push_back({path, n.primitive_type.value_or("other")});
        } else if (n.kind == NodeKind::ReferenceCycle) {
            tokens.push_back({path, "cycle"});
        }
    });
    return tokens;
}

StructuralFingerprint fingerprint(const std::optional<DataNode>& root) {
    if (!root) {
        return StructuralFingerprint{std::string(StructuralFingerprint::kEmpty)};
    }
    std::vector<std::string> lines;
    walk(*root, "", [&](const DataNode& n, const std::string& path) {
        std::string line = path.empty() ? std::string("$") : "$" + path;
        line += '\t';
        line += to_string(n.kind);
        if (n.primitive_type) {
            line += '\t';
            line += *n.primitive_type;
        }
        lines.push_back(std::move(line));
    });
    std::sort(lines.begin(), lines.end());
    std::string form;
    for (const auto& line : lines) {
        form += line;
        form += '\n';
    }
    return StructuralFingerprint{std::move(form)};
}

StructuralFingerprint fingerprint(const Payload& payload) {
    return fingerprint(payload.root);
}

namespace {

void dedupe_parameters(std::vector<Parameter>& parameters) {
    std::set<std::pair<ParameterLocation, std::string>> seen;
    std::vector<Parameter> kept;
    for (auto& parameter : parameters) {
        if (seen.emplace(parameter.location, parameter.name).second) {
            kept.push_back(std::move(parameter));
        }
    }
    std::sort(kept.begin(), kept.end(), [](const Parameter& a, const Parameter& b) {
        return std::tie(a.location, a.name) < std::tie(b.location, b.name);
    });
    parameters = std::move(kept);
}

void sort_payloads(std::vector<Payload>& payloads) {
    std::stable_sort(payloads.begin(), payloads.end(), [](const Payload& a, const Payload& b) {
        return std::tie(a.status_code, a.media_type) < std::tie(b.status_code, b.media_type);
    });
}

}  // namespace

ApiDescription normalize(ApiDescription api) {
    std::map<std::string, Route> by_path;
    for (auto& route : api.routes) {
        auto segments = normalize_path(route.path, "");
        auto path = join_segments(segments);
        auto [it, inserted] = by_path.try_emplace(path);
        if (inserted) {
            it->second.path = path;
            it->second.segments = std::move(segments);
        }
        auto& target = it->second.operations;
        for (auto& operation : route.operations) {
            bool duplicate = std::any_of(target.begin(), target.end(), [&](const Operation& o) {
                return o.verb == operation.verb;
            });
            if (!duplicate) {
                target.push_back(std::move(operation));
            }
        }
    }

    api.routes.clear();
    for (auto& [path, route] : by_path) {
        if (route.operations.empty()) {
            continue;
        }
        for (auto& operation : route.operations) {
            dedupe_parameters(operation.parameters);
            for (auto& payload : operation.request_payloads) {
                payload.direction = PayloadDirection::Request;
                payload.status_code.reset();
            }
            for (auto& payload : operation.response_payloads) {
                payload.direction = PayloadDirection::Response;
                if (!payload.status_code) {
                    payload.status_code = "default";
                }
            }
            sort_payloads(operation.request_payloads);
            sort_payloads(operation.response_payloads);
        }
        std::sort(route.operations.begin(), route.operations.end(),
                  [](const Operation& a, const Operation& b) { return a.verb < b.verb; });
        api.routes.push_back(std::move(route));
    }
    return api;
}

namespace {

void check_node(const DataNode& node, const std::string& where, std::vector<std::string>& out) {
    switch (node.kind) {
        case NodeKind::Primitive:
            if (!node.primitive_type) {
                out.push_back(where + ": primitive node without type");
            }
            if (!node.children.empty()) {
                out.push_back(where + ": primitive node with children");
            }
            break;
        case NodeKind::ReferenceCycle:
            if (!node.children.empty()) {
                out.push_back(where + ": cycle marker with children");
            }
            break;
        case NodeKind::Array:
            if (node.children.size() != 1) {
                out.push_back(where + ": array node must have exactly one item child");
            }
            break;
        case NodeKind::Object:
            break;
    }
    if (node.kind != NodeKind::Primitive && node.primitive_type) {
        out.push_back(where + ": non-primitive node carries a primitive type");
    }
    for (const auto& child : node.children) {
        check_node(child, where + "/" + child.name, out);
    }
}

}  // namespace

std::vector<std::string> check_invariants(const ApiDescription& api) {
    std::vector<std::string> out;
    std::set<std::string> paths;
    for (std::size_t i = 0; i < api.routes.size(); ++i) {
        const auto& route = api.routes[i];
        if (!paths.insert(route.path).second) {
            out.push_back("duplicate route " + route.path);
        }
        if (i > 0 && !(api.routes[i - 1].path < route.path)) {
            out.push_back("routes not sorted at " + route.path);
        }
        if (std::any_of(route.segments.begin(), route.segments.end(),
                        [](const std::string& s) { return s.empty(); })) {
            out.push_back("empty segment in " + route.path);
        }
        if (join_segments(route.segments) != route.path) {
            out.push_back("path/segment mismatch in " + route.path);
        }
        if (route.operations.empty()) {
            out.push_back("route without operations " + route.path);
        }
        std::set<HttpVerb> verbs;
        for (const auto& operation : route.operations) {
            const auto where = std::string(to_string(operation.verb)) + " " + route.path;
            if (!verbs.insert(operation.verb).second) {
                out.push_back("duplicate verb " + where);
            }
            std::set<std::pair<ParameterLocation, std::string>> parameters;
            for (const auto& parameter : operation.parameters) {
                if (!parameters.emplace(parameter.location, parameter.name).second) {
                    out.push_back("duplicate parameter " + parameter.name + " in " + where);
                }
            }
            for (const auto& payload : operation.request_payloads) {
                if (payload.direction != PayloadDirection::Request || payload.status_code) {
                    out.push_back("malformed request payload in " + where);
                }
                if (payload.root) {
                    check_node(*payload.root, where + " request", out);
                }
            }
            for (const auto& payload : operation.response_payloads) {
                if (payload.direction != PayloadDirection::Response || !payload.status_code) {
                    out.push_back("malformed response payload in " + where);
                }
                if (payload.root) {
                    check_node(*payload.root, where + " response", out);
                }
            }
        }
    }
    return out;
}

std::size_t operation_count(const ApiDescription& api) {
    std::size_t n = 0;
    for (const auto& route : api.routes) {
        n += route.operations.size();
    }
    return n;
}

}  // namespace restmetrics
