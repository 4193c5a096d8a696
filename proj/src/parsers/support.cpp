// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <regex>
#include <utility>

#include <yaml-cpp/yaml.h>

namespace restmetrics {

std::string_view to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::MalformedDocument: return "MalformedDocument";
        case ParseErrorKind::UnsupportedVersion: return "UnsupportedVersion";
        case ParseErrorKind::UnresolvableReference: return "UnresolvableReference";
    }
    return "MalformedDocument";
}

ParseError::ParseError(ParseErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace restmetrics

namespace restmetrics::detail {

namespace {

constexpr std::size_t kMaxDepth = 512;
constexpr std::size_t kMaxYamlNodes = 4'000'000;

bool is_null_literal(const std::string& s) {
    return s.empty() || s == "~" || s == "null" || s == "Null" || s == "NULL";
}

std::optional<bool> bool_literal(const std::string& s) {
    if (s == "true" || s == "True" || s == "TRUE") return true;
    if (s == "false" || s == "False" || s == "FALSE") return false;
    return std::nullopt;
}

Json resolve_plain_scalar(const std::string& s) {
    if (is_null_literal(s)) {
        return nullptr;
    }
    if (auto b = bool_literal(s)) {
        return *b;
    }
    static const std::regex int_re(R"([-+]?[0-9]+)");
    static const std::regex float_re(R"([-+]?(\.[0-9]+|[0-9]+(\.[0-9]*)?)([eE][-+]?[0-9]+)?)");
    if (std::regex_match(s, int_re)) {
        std::int64_t value = 0;
        const char* begin = s.data() + (s[0] == '+' ? 1 : 0);
        auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), value);
        if (ec == std::errc() && ptr == s.data() + s.size()) {
            return value;
        }
        return s;
    }
    if (std::regex_match(s, float_re)) {
        try {
            return std::stod(s);
        } catch (const std::exception&) {
            return s;
        }
    }
    return s;
}

struct YamlConverter {
    std::size_t nodes = 0;

    Json convert(const YAML::Node& node, std::size_t depth) {
        if (depth > kMaxDepth) {
            malformed("document nesting exceeds " + std::to_string(kMaxDepth) + " levels");
        }
        if (++nodes > kMaxYamlNodes) {
            malformed("document expands to more than " + std::to_string(kMaxYamlNodes) + " nodes");
        }
        const std::string& tag = node.Tag();
        switch (node.Type()) {
            case YAML::NodeType::Null:
            case YAML::NodeType::Undefined:
                if (!tag.empty() && tag != "?" && tag != "!" && tag.rfind("tag:yaml.org", 0) != 0) {
                    return Json{{tag, ""}};
                }
                return nullptr;
            case YAML::NodeType::Scalar: {
                const auto& text = node.Scalar();
                if (tag == "!" || tag == "tag:yaml.org,2002:str") {
                    return text;
                }
                if (tag == "?" || tag.empty() || tag.rfind("tag:yaml.org", 0) == 0) {
                    return resolve_plain_scalar(text);
                }
                return Json{{tag, text}};
            }
            case YAML::NodeType::Sequence: {
                Json out = Json::array();
                for (const auto& item : node) {
                    out.push_back(convert(item, depth + 1));
                }
                return out;
            }
            case YAML::NodeType::Map: {
                Json out = Json::object();
                std::vector<Json> merged;
                for (const auto& entry : node) {
                    std::string key = entry.first.IsScalar() ? entry.first.Scalar()
                                                             : YAML::Dump(entry.first);
                    if (key == "<<" && entry.first.Tag() == "?") {
                        merged.push_back(convert(entry.second, depth + 1));
                        continue;
                    }
                    out[key] = convert(entry.second, depth + 1);
                }
                // YAML merge keys: explicit entries win over merged ones.
                for (const auto& source : merged) {
                    for (const auto& part : source.is_array() ? source : Json::array({source})) {
                        if (!part.is_object()) {
                            continue;
                        }
                        for (const auto& [k, v] : part.items()) {
                            if (!out.contains(k)) {
                                out[k] = v;
                            }
                        }
                    }
                }
                return out;
            }
        }
        return nullptr;
    }
};

}  // namespace

void fail(ParseErrorKind kind, const std::string& message) {
    throw ParseError(kind, message);
}

std::string_view strip_bom(std::string_view text) {
    if (text.size() >= 3 && static_cast<unsigned char>(text[0]) == 0xEF &&
        static_cast<unsigned char>(text[1]) == 0xBB && static_cast<unsigned char>(text[2]) == 0xBF) {
        text.remove_prefix(3);
    }
    return text;
}

Json load_structured(std::string_view text) {
    text = strip_bom(text);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        malformed("document is empty");
    }
    if (text[first] == '{' || text[first] == '[') {
        try {
            return Json::parse(text);
        } catch (const Json::parse_error& e) {
            malformed(std::string("invalid JSON: ") + e.what());
        }
    }
    try {
        YAML::Node root = YAML::Load(std::string(text));
        YamlConverter converter;
        return converter.convert(root, 0);
    } catch (const YAML::Exception& e) {
        malformed(std::string("invalid YAML: ") + e.what());
    }
}

std::optional<std::string> local_tag_reference(const Json& value) {
    if (value.is_object() && value.size() == 1) {
        const auto& key = value.begin().key();
        if (!key.empty() && key[0] == '!') {
            return key + " " + scalar_text(value.begin().value());
        }
    }
    return std::nullopt;
}

const Json* member(const Json& object, std::string_view key) {
    if (!object.is_object()) {
        return nullptr;
    }
    auto it = object.find(std::string(key));
    return it == object.end() ? nullptr : &*it;
}

std::string scalar_text(const Json& value) {
    if (value.is_string()) {
        return value.get<std::string>();
    }
    if (value.is_null()) {
        return "";
    }
    if (value.is_number() || value.is_boolean()) {
        return value.dump();
    }
    return "";
}

std::string url_path(std::string_view url) {
    if (auto cut = url.find_first_of("?#"); cut != std::string_view::npos) {
        url = url.substr(0, cut);
    }
    if (auto scheme = url.find("://"); scheme != std::string_view::npos) {
        url = url.substr(scheme + 3);
        auto slash = url.find('/');
        url = slash == std::string_view::npos ? std::string_view{} : url.substr(slash);
    } else if (url.substr(0, 2) == "//") {
        url = url.substr(2);
        auto slash = url.find('/');
        url = slash == std::string_view::npos ? std::string_view{} : url.substr(slash);
    }
    auto segments = normalize_path(url, "");
    return segments.empty() ? std::string() : join_segments(segments);
}

std::vector<std::string> template_names(std::string_view segment) {
    std::vector<std::string> names;
    std::size_t pos = 0;
    while ((pos = segment.find('{', pos)) != std::string_view::npos) {
        auto close = segment.find('}', pos + 1);
        if (close == std::string_view::npos) {
            break;
        }
        auto name = segment.substr(pos + 1, close - pos - 1);
        if (!name.empty()) {
            names.emplace_back(name);
        }
        pos = close + 1;
    }
    return names;
}

void add_implicit_path_parameters(Operation& operation, std::string_view path) {
    for (const auto& segment : normalize_path(path, "")) {
        for (auto& name : template_names(segment)) {
            bool declared = std::any_of(
                operation.parameters.begin(), operation.parameters.end(), [&](const Parameter& p) {
                    return p.location == ParameterLocation::Path && p.name == name;
                });
            if (!declared) {
                operation.parameters.push_back({name, ParameterLocation::Path, "string", true});
            }
        }
    }
}

void merge_parameters(std::vector<Parameter>& parameters, const std::vector<Parameter>& inherited) {
    for (const auto& parameter : inherited) {
        bool present = std::any_of(parameters.begin(), parameters.end(), [&](const Parameter& p) {
            return p.location == parameter.location && p.name == parameter.name;
        });
        if (!present) {
            parameters.push_back(parameter);
        }
    }
}

// ---------------------------------------------------------------------------
// JSON pointer resolution

namespace {

std::string percent_decode(std::string_view text) {
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '%' && i + 2 < text.size() && std::isxdigit(static_cast<unsigned char>(text[i + 1])) &&
            std::isxdigit(static_cast<unsigned char>(text[i + 2]))) {
            out += static_cast<char>(std::stoi(std::string(text.substr(i + 1, 2)), nullptr, 16));
            i += 2;
        } else {
            out += text[i];
        }
    }
    return out;
}

}  // namespace

const Json& resolve_pointer(const Json& document, const std::string& reference) {
    if (reference.empty() || reference[0] != '#') {
        fail(ParseErrorKind::UnresolvableReference, "external reference '" + reference + "'");
    }
    auto pointer = percent_decode(std::string_view(reference).substr(1));
    const Json* current = &document;
    if (pointer.empty()) {
        return *current;
    }
    if (pointer[0] != '/') {
        fail(ParseErrorKind::UnresolvableReference, "unsupported reference '" + reference + "'");
    }
    std::size_t start = 1;
    while (true) {
        auto end = pointer.find('/', start);
        std::string token = pointer.substr(start, end == std::string::npos ? std::string::npos : end - start);
        std::string unescaped;
        for (std::size_t i = 0; i < token.size(); ++i) {
            if (token[i] == '~' && i + 1 < token.size() && (token[i + 1] == '0' || token[i + 1] == '1')) {
                unescaped += token[i + 1] == '0' ? '~' : '/';
                ++i;
            } else {
                unescaped += token[i];
            }
        }
        if (current->is_object()) {
            auto it = current->find(unescaped);
            if (it == current->end()) {
                fail(ParseErrorKind::UnresolvableReference, "dangling reference '" + reference + "'");
            }
            current = &*it;
        } else if (current->is_array()) {
            std::size_t index = 0;
            auto [ptr, ec] = std::from_chars(unescaped.data(), unescaped.data() + unescaped.size(), index);
            if (ec != std::errc() || ptr != unescaped.data() + unescaped.size() || index >= current->size()) {
                fail(ParseErrorKind::UnresolvableReference, "dangling reference '" + reference + "'");
            }
            current = &(*current)[index];
        } else {
            fail(ParseErrorKind::UnresolvableReference, "dangling reference '" + reference + "'");
        }
        if (end == std::string::npos) {
            break;
        }
        start = end + 1;
    }
    return *current;
}

// ---------------------------------------------------------------------------
// Schema conversion

namespace {

std::optional<std::string> ref_of(const Json& schema) {
    if (const auto* ref = member(schema, "$ref")) {
        if (!ref->is_string()) {
            malformed("$ref must be a string");
        }
        return ref->get<std::string>();
    }
    return std::nullopt;
}

std::string declared_type(const Json& schema) {
    const auto* type = member(schema, "type");
    if (type == nullptr) {
        return "";
    }
    if (type->is_string()) {
        return type->get<std::string>();
    }
    if (type->is_array()) {
        for (const auto& t : *type) {
            if (t.is_string() && t.get<std::string>() != "null") {
                return t.get<std::string>();
            }
        }
    }
    return "";
}

const Json* first_alternative(const Json& schema) {
    for (const char* key : {"oneOf", "anyOf"}) {
        if (const auto* alternatives = member(schema, key); alternatives && alternatives->is_array() &&
                                                            !alternatives->empty()) {
            return &(*alternatives)[0];
        }
    }
    return nullptr;
}

bool constrains_shape(const Json& schema) {
    for (const char* key : {"$ref", "type", "properties", "items", "allOf", "oneOf", "anyOf", "enum",
                            "additionalProperties"}) {
        if (member(schema, key) != nullptr) {
            return true;
        }
    }
    return false;
}

std::string primitive_token(const Json& schema, const std::string& type) {
    if (type == "string") {
        if (const auto* format = member(schema, "format"); format && format->is_string() &&
                                                           format->get<std::string>() == "binary") {
            return "file";
        }
        return "string";
    }
    return normalize_type_token(type);
}

}  // namespace

SchemaConverter::SchemaConverter(const Json& document, std::size_t node_budget)
    : document_(document), budget_(node_budget) {}

void SchemaConverter::charge() {
    if (++used_ > budget_) {
        malformed("schema expansion exceeds " + std::to_string(budget_) + " nodes");
    }
}

const Json& SchemaConverter::resolve(const Json& value) {
    const Json* current = &value;
    std::vector<std::string> seen;
    while (auto ref = ref_of(*current)) {
        if (std::find(seen.begin(), seen.end(), *ref) != seen.end()) {
            malformed("reference loop through '" + *ref + "'");
        }
        seen.push_back(*ref);
        current = &resolve_pointer(document_, *ref);
    }
    return *current;
}

std::optional<DataNode> SchemaConverter::convert_root(const Json& schema) {
    if (!schema.is_object()) {
        return std::nullopt;
    }
    if (!ref_of(schema)) {
        if (!constrains_shape(schema)) {
            return std::nullopt;
        }
        return convert(schema, "");
    }
    const auto& target = resolve(schema);
    if (!target.is_object() || !constrains_shape(target)) {
        return std::nullopt;
    }
    return convert(schema, "");
}

DataNode SchemaConverter::convert(const Json& schema, const std::string& name) {
    ref_stack_.clear();
    return convert_impl(schema, name, 0);
}

DataNode SchemaConverter::convert_impl(const Json& schema, const std::string& name, std::size_t depth) {
    if (depth > kMaxDepth) {
        malformed("schema nesting exceeds " + std::to_string(kMaxDepth) + " levels");
    }
    charge();
    if (auto ref = ref_of(schema)) {
        if (std::find(ref_stack_.begin(), ref_stack_.end(), *ref) != ref_stack_.end()) {
            return DataNode::cycle(name);
        }
        const auto& target = resolve_pointer(document_, *ref);
        ref_stack_.push_back(*ref);
        auto node = convert_impl(target, name, depth + 1);
        ref_stack_.pop_back();
        return node;
    }
    return convert_resolved(schema, name, depth);
}

void SchemaConverter::merge_into(DataNode& target, DataNode part) {
    if (part.kind != NodeKind::Object) {
        return;
    }
    for (auto& child : part.children) {
        bool present = std::any_of(target.children.begin(), target.children.end(),
                                   [&](const DataNode& c) { return c.name == child.name; });
        if (!present) {
            target.children.push_back(std::move(child));
        }
    }
}

DataNode SchemaConverter::convert_resolved(const Json& schema, const std::string& name, std::size_t depth) {
    if (!schema.is_object()) {
        // `true`/`false` schemas and garbage place no usable constraint.
        return DataNode::primitive(name, "other");
    }

    const auto type = declared_type(schema);
    const auto* all_of = member(schema, "allOf");
    const auto* properties = member(schema, "properties");

    if (all_of && all_of->is_array() && !all_of->empty()) {
        std::vector<DataNode> parts;
        for (const auto& part : *all_of) {
            parts.push_back(convert_impl(part, name, depth + 1));
        }
        bool any_object = properties != nullptr || type == "object" ||
                          std::any_of(parts.begin(), parts.end(),
                                      [](const DataNode& p) { return p.kind == NodeKind::Object; });
        if (!any_object) {
            return std::move(parts.front());
        }
        auto node = DataNode::object(name);
        if (properties && properties->is_object()) {
            for (const auto& [key, value] : properties->items()) {
                node.children.push_back(convert_impl(value, key, depth + 1));
            }
        }
        for (auto& part : parts) {
            merge_into(node, std::move(part));
        }
        return node;
    }

    if (type.empty() && properties == nullptr) {
        if (const auto* alternative = first_alternative(schema)) {
            return convert_impl(*alternative, name, depth + 1);
        }
    }

    if (type == "object" || (type.empty() && properties != nullptr) ||
        (type.empty() && member(schema, "additionalProperties") != nullptr)) {
        auto node = DataNode::object(name);
        if (properties && properties->is_object()) {
            for (const auto& [key, value] : properties->items()) {
                node.children.push_back(convert_impl(value, key, depth + 1));
            }
        }
        return node;
    }

    const auto* items = member(schema, "items");
    if (type == "array" || (type.empty() && items != nullptr)) {
        if (items != nullptr && items->is_object()) {
            return DataNode::array(name, convert_impl(*items, "", depth + 1));
        }
        charge();
        return DataNode::array(name, DataNode::primitive("", "other"));
    }

    if (!type.empty()) {
        return DataNode::primitive(name, primitive_token(schema, type));
    }
    if (member(schema, "enum") != nullptr) {
        return DataNode::primitive(name, "string");
    }
    return DataNode::primitive(name, "other");
}

std::string SchemaConverter::type_token(const Json& schema, std::size_t depth) {
    if (depth > kMaxDepth) {
        malformed("schema nesting exceeds " + std::to_string(kMaxDepth) + " levels");
    }
    const auto& target = resolve(schema);
    if (!target.is_object()) {
        return "other";
    }
    auto type = declared_type(target);
    if (type.empty()) {
        if (const auto* alternative = first_alternative(target)) {
            return type_token(*alternative, depth + 1);
        }
        if (const auto* all_of = member(target, "allOf"); all_of && all_of->is_array() && all_of->size() == 1) {
            return type_token((*all_of)[0], depth + 1);
        }
        return member(target, "enum") != nullptr ? "string" : "other";
    }
    return primitive_token(target, type);
}

}  // namespace restmetrics::detail
