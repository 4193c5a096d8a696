// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <utility>

#include "restmetrics/parsers.hpp"
#include "support.hpp"

namespace restmetrics {

namespace {

using detail::Json;
using detail::member;
using detail::scalar_text;

constexpr std::size_t kMaxDepth = 256;

const std::set<std::string, std::less<>> kMethodNames{"get",  "post", "put",    "delete",
                                                      "patch", "head", "options"};

std::string trim(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return "";
    }
    auto last = text.find_last_not_of(" \t\r\n");
    return std::string(text.substr(first, last - first + 1));
}

[[noreturn]] void unresolvable(const std::string& what) {
    detail::fail(ParseErrorKind::UnresolvableReference, what);
}

void reject_local_tag(const Json& value) {
    if (auto reference = detail::local_tag_reference(value)) {
        unresolvable("'" + *reference + "' refers to another file");
    }
}

// ---------------------------------------------------------------------------
// Type system

bool is_builtin(std::string_view name) {
    static const std::set<std::string, std::less<>> builtins{
        "string",   "number",    "integer",       "boolean", "date-only", "time-only",
        "datetime", "datetime-only", "file",      "nil",     "any",       "object", "array"};
    return builtins.count(name) != 0;
}

// Splits a type expression on top-level `|`.
std::vector<std::string> split_union(const std::string& expression) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string current;
    for (char c : expression) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '|' && depth == 0) {
            parts.push_back(trim(current));
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(trim(current));
    return parts;
}

class RamlTypes {
public:
    explicit RamlTypes(const Json& root) {
        for (const char* section : {"schemas", "types"}) {
            const auto* declarations = member(root, section);
            if (declarations == nullptr || declarations->is_null()) {
                continue;
            }
            if (declarations->is_object()) {
                for (const auto& [name, declaration] : declarations->items()) {
                    declarations_[name] = &declaration;
                }
            } else if (declarations->is_array()) {  // RAML 0.8 style list of single-entry maps
                for (const auto& entry : *declarations) {
                    if (entry.is_object()) {
                        for (const auto& [name, declaration] : entry.items()) {
                            declarations_[name] = &declaration;
                        }
                    }
                }
            } else {
                detail::malformed(std::string("'") + section + "' must be a map");
            }
        }
    }

    /// Body root; nullopt for absent, `any`-typed or opaque (XML schema) bodies.
    std::optional<DataNode> body_root(const Json& declaration) {
        stack_.clear();
        reject_local_tag(declaration);
        if (declaration.is_null()) {
            return std::nullopt;
        }
        if (declaration.is_string()) {
            auto expression = trim(declaration.get<std::string>());
            if (expression == "any" || expression.empty() || expression[0] == '<') {
                return std::nullopt;
            }
        }
        if (declaration.is_object()) {
            const auto* type = member(declaration, "type");
            if (type == nullptr) {
                type = member(declaration, "schema");
            }
            if (type == nullptr && member(declaration, "properties") == nullptr &&
                member(declaration, "items") == nullptr) {
                return std::nullopt;
            }
            if (type != nullptr && type->is_string()) {
                auto expression = trim(type->get<std::string>());
                if ((expression == "any" || (!expression.empty() && expression[0] == '<')) &&
                    member(declaration, "properties") == nullptr) {
                    return std::nullopt;
                }
            }
        }
        return build(declaration, "", 0);
    }

    DataNode build(const Json& declaration, const std::string& name, std::size_t depth) {
        if (depth > kMaxDepth) {
            detail::malformed("type nesting exceeds " + std::to_string(kMaxDepth) + " levels");
        }
        reject_local_tag(declaration);
        if (declaration.is_null()) {
            return DataNode::primitive(name, "string");
        }
        if (declaration.is_string()) {
            return build_expression(declaration.get<std::string>(), name, depth);
        }
        if (declaration.is_array()) {
            return build_inherited(declaration, name, depth);
        }
        if (!declaration.is_object()) {
            return DataNode::primitive(name, "string");
        }

        const auto* type = member(declaration, "type");
        if (type == nullptr) {
            type = member(declaration, "schema");
        }
        const auto* properties = member(declaration, "properties");
        const auto* items = member(declaration, "items");

        if (properties != nullptr) {
            auto node = type ? build_inherited(*type, name, depth) : DataNode::object(name);
            if (node.kind != NodeKind::Object) {
                node = DataNode::object(name);
            }
            add_properties(node, *properties, depth);
            return node;
        }
        if (items != nullptr || (type && type->is_string() && trim(type->get<std::string>()) == "array")) {
            return DataNode::array(name, items ? build(*items, "", depth + 1)
                                               : DataNode::primitive("", "other"));
        }
        if (type != nullptr) {
            return build_inherited(*type, name, depth);
        }
        return DataNode::primitive(name, "string");
    }

    /// Parameter token: builtin scalar names map directly, arrays/objects to "other".
    std::string scalar_token(const Json& declaration, std::size_t depth = 0) {
        if (depth > kMaxDepth) {
            detail::malformed("type nesting exceeds " + std::to_string(kMaxDepth) + " levels");
        }
        reject_local_tag(declaration);
        if (declaration.is_null()) {
            return "string";
        }
        if (declaration.is_object()) {
            if (member(declaration, "properties") != nullptr || member(declaration, "items") != nullptr) {
                return "other";
            }
            const auto* type = member(declaration, "type");
            if (type == nullptr) {
                return "string";
            }
            return scalar_token(*type, depth + 1);
        }
        if (!declaration.is_string()) {
            return "other";
        }
        auto expression = trim(declaration.get<std::string>());
        auto alternatives = split_union(expression);
        for (const auto& alternative : alternatives) {
            if (alternative != "nil") {
                expression = alternative;
                break;
            }
        }
        if (expression.size() >= 2 && expression.compare(expression.size() - 2, 2, "[]") == 0) {
            return "other";
        }
        if (is_builtin(expression)) {
            return (expression == "object" || expression == "array" || expression == "any" ||
                    expression == "nil")
                       ? "other"
                       : normalize_type_token(expression);
        }
        if (expression.find('.') != std::string::npos) {
            unresolvable("library type '" + expression + "'");
        }
        auto it = declarations_.find(expression);
        if (it == declarations_.end()) {
            unresolvable("unknown type '" + expression + "'");
        }
        if (std::find(stack_.begin(), stack_.end(), expression) != stack_.end()) {
            return "other";
        }
        stack_.push_back(expression);
        auto token = scalar_token(*it->second, depth + 1);
        stack_.pop_back();
        return token;
    }

    /// Properties of an object type, used for `queryString`.
    DataNode object_of(const Json& declaration) {
        stack_.clear();
        return build(declaration, "", 0);
    }

private:
    void add_properties(DataNode& node, const Json& properties, std::size_t depth) {
        if (properties.is_null()) {
            return;
        }
        if (!properties.is_object()) {
            detail::malformed("'properties' must be a map");
        }
        for (const auto& [raw_name, declaration] : properties.items()) {
            auto name = raw_name;
            if (!name.empty() && name.back() == '?') {
                name.pop_back();
            }
            auto child = build(declaration, name, depth + 1);
            auto existing = std::find_if(node.children.begin(), node.children.end(),
                                         [&](const DataNode& c) { return c.name == name; });
            if (existing != node.children.end()) {
                *existing = std::move(child);
            } else {
                node.children.push_back(std::move(child));
            }
        }
    }

    // `type:` value that may be an expression, a list of parents, or an inline declaration.
    DataNode build_inherited(const Json& type, const std::string& name, std::size_t depth) {
        if (type.is_array()) {
            auto node = DataNode::object(name);
            for (const auto& parent : type) {
                auto part = build(parent, name, depth + 1);
                for (auto& child : part.children) {
                    if (part.kind != NodeKind::Object) break;
                    bool present = std::any_of(node.children.begin(), node.children.end(),
                                               [&](const DataNode& c) { return c.name == child.name; });
                    if (!present) node.children.push_back(std::move(child));
                }
            }
            return node;
        }
        return build(type, name, depth + 1);
    }

    DataNode build_expression(const std::string& raw, const std::string& name, std::size_t depth) {
        auto expression = trim(raw);
        if (!expression.empty() && expression[0] == '{') {
            return build_json_schema(expression, name);
        }
        if (!expression.empty() && expression[0] == '<') {
            return DataNode::primitive(name, "other");
        }
        auto alternatives = split_union(expression);
        if (alternatives.size() > 1) {
            for (const auto& alternative : alternatives) {
                if (alternative != "nil") {
                    return build_expression(alternative, name, depth + 1);
                }
            }
            return DataNode::primitive(name, "other");
        }
        if (expression.size() >= 2 && expression.front() == '(' && expression.back() == ')') {
            return build_expression(expression.substr(1, expression.size() - 2), name, depth + 1);
        }
        if (expression.size() >= 2 && expression.compare(expression.size() - 2, 2, "[]") == 0) {
            return DataNode::array(name, build_expression(expression.substr(0, expression.size() - 2), "",
                                                          depth + 1));
        }
        if (expression.empty()) {
            return DataNode::primitive(name, "string");
        }
        if (is_builtin(expression)) {
            if (expression == "object") return DataNode::object(name);
            if (expression == "array") return DataNode::array(name, DataNode::primitive("", "other"));
            if (expression == "any" || expression == "nil") return DataNode::primitive(name, "other");
            return DataNode::primitive(name, normalize_type_token(expression));
        }
        if (expression.find('.') != std::string::npos) {
            unresolvable("library type '" + expression + "'");
        }
        auto it = declarations_.find(expression);
        if (it == declarations_.end()) {
            unresolvable("unknown type '" + expression + "'");
        }
        if (std::find(stack_.begin(), stack_.end(), expression) != stack_.end()) {
            return DataNode::cycle(name);
        }
        stack_.push_back(expression);
        auto node = build(*it->second, name, depth + 1);
        stack_.pop_back();
        return node;
    }

    DataNode build_json_schema(const std::string& text, const std::string& name) {
        Json schema;
        try {
            schema = Json::parse(text);
        } catch (const Json::parse_error& e) {
            detail::malformed(std::string("inline JSON schema: ") + e.what());
        }
        detail::SchemaConverter converter(schema);
        auto root = converter.convert_root(schema);
        if (!root) {
            return DataNode::primitive(name, "other");
        }
        root->name = name;
        return *root;
    }

    std::map<std::string, const Json*, std::less<>> declarations_;
    std::vector<std::string> stack_;
};

// ---------------------------------------------------------------------------
// Traits and resource types

struct Templating {
    std::map<std::string, std::string> values;

    std::string apply_to(const std::string& text) const {
        std::string out;
        std::size_t pos = 0;
        while (true) {
            auto open = text.find("<<", pos);
            if (open == std::string::npos) {
                out += text.substr(pos);
                return out;
            }
            auto close = text.find(">>", open + 2);
            if (close == std::string::npos) {
                out += text.substr(pos);
                return out;
            }
            out += text.substr(pos, open - pos);
            out += expand(trim(text.substr(open + 2, close - open - 2)));
            pos = close + 2;
        }
    }

    Json apply(const Json& value) const {
        if (value.is_string()) {
            return apply_to(value.get<std::string>());
        }
        if (value.is_array()) {
            Json out = Json::array();
            for (const auto& item : value) out.push_back(apply(item));
            return out;
        }
        if (value.is_object()) {
            Json out = Json::object();
            for (const auto& [key, item] : value.items()) out[apply_to(key)] = apply(item);
            return out;
        }
        return value;
    }

private:
    std::string expand(const std::string& reference) const {
        auto bar = reference.find('|');
        auto name = trim(reference.substr(0, bar));
        auto it = values.find(name);
        if (it == values.end()) {
            unresolvable("template parameter '<<" + name + ">>' has no value");
        }
        std::string value = it->second;
        while (bar != std::string::npos) {
            auto next = reference.find('|', bar + 1);
            auto function = trim(reference.substr(bar + 1, next == std::string::npos ? std::string::npos
                                                                                       : next - bar - 1));
            value = transform(function, value);
            bar = next;
        }
        return value;
    }

    static std::string transform(const std::string& function, std::string value) {
        auto lower = [](std::string s) {
            for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            return s;
        };
        auto upper = [](std::string s) {
            for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            return s;
        };
        if (function == "!singularize") {
            if (value.size() > 3 && value.compare(value.size() - 3, 3, "ies") == 0) {
                return value.substr(0, value.size() - 3) + "y";
            }
            if (!value.empty() && value.back() == 's') value.pop_back();
            return value;
        }
        if (function == "!pluralize") {
            if (!value.empty() && value.back() == 'y') return value.substr(0, value.size() - 1) + "ies";
            return value + "s";
        }
        if (function == "!uppercase") return upper(value);
        if (function == "!lowercase") return lower(value);
        if (function == "!uppercamelcase" || function == "!lowercamelcase") {
            if (!value.empty()) {
                value[0] = static_cast<char>(function == "!uppercamelcase"
                                                 ? std::toupper(static_cast<unsigned char>(value[0]))
                                                 : std::tolower(static_cast<unsigned char>(value[0])));
            }
            return value;
        }
        unresolvable("template function '" + function + "'");
    }
};

// Own values win; maps merge recursively.
void merge_defaults(Json& target, const Json& defaults) {
    if (!target.is_object() || !defaults.is_object()) {
        return;
    }
    for (const auto& [key, value] : defaults.items()) {
        auto it = target.find(key);
        if (it == target.end() || it->is_null()) {
            target[key] = value;
        } else if (it->is_object() && value.is_object()) {
            merge_defaults(*it, value);
        }
    }
}

struct Reference {
    std::string name;
    std::map<std::string, std::string> parameters;
};

std::vector<Reference> references(const Json& value) {
    std::vector<Reference> out;
    auto one = [&](const Json& item) {
        if (item.is_string()) {
            out.push_back({item.get<std::string>(), {}});
        } else if (item.is_object() && item.size() == 1) {
            Reference reference{item.begin().key(), {}};
            if (item.begin().value().is_object()) {
                for (const auto& [k, v] : item.begin().value().items()) {
                    reference.parameters[k] = scalar_text(v);
                }
            }
            out.push_back(std::move(reference));
        } else if (!item.is_null()) {
            detail::malformed("trait or resource type reference must be a name or a single-entry map");
        }
    };
    if (value.is_array()) {
        for (const auto& item : value) one(item);
    } else {
        one(value);
    }
    return out;
}

// ---------------------------------------------------------------------------

class RamlReader {
public:
    explicit RamlReader(const Json& root) : root_(root), types_(root) {
        default_media_types_ = {"application/json"};
        if (const auto* media = member(root_, "mediaType")) {
            std::vector<std::string> declared;
            if (media->is_string()) {
                declared.push_back(media->get<std::string>());
            } else if (media->is_array()) {
                for (const auto& m : *media) {
                    if (m.is_string()) declared.push_back(m.get<std::string>());
                }
            }
            if (!declared.empty()) default_media_types_ = declared;
        }
        traits_ = section("traits");
        resource_types_ = section("resourceTypes");
    }

    ApiDescription read(std::string_view source_file) {
        ApiDescription api;
        api.source_format = SourceFormat::Raml;
        api.source_file = std::string(source_file);
        if (const auto* title = member(root_, "title")) api.title = scalar_text(*title);
        if (const auto* version = member(root_, "version")) api.version = scalar_text(*version);
        if (const auto* base_uri = member(root_, "baseUri")) {
            auto text = scalar_text(*base_uri);
            if (auto pos = text.find("{version}"); pos != std::string::npos) {
                text.replace(pos, 9, api.version);
            }
            api.base_path = detail::url_path(text);
        }
        for (const auto& [key, value] : root_.items()) {
            if (!key.empty() && key[0] == '/') {
                read_resource(api, "", key, value, {}, 0);
            }
        }
        return normalize(std::move(api));
    }

private:
    std::map<std::string, const Json*> section(const char* name) {
        std::map<std::string, const Json*> out;
        const auto* declarations = member(root_, name);
        if (declarations == nullptr || declarations->is_null()) {
            return out;
        }
        auto add = [&](const Json& map) {
            for (const auto& [key, value] : map.items()) out[key] = &value;
        };
        if (declarations->is_object()) {
            add(*declarations);
        } else if (declarations->is_array()) {
            for (const auto& entry : *declarations) {
                if (entry.is_object()) add(entry);
            }
        } else {
            detail::malformed(std::string("'") + name + "' must be a map");
        }
        return out;
    }

    const Json& lookup(const std::map<std::string, const Json*>& table, const std::string& name,
                       const char* what) {
        if (name.find('.') != std::string::npos) {
            unresolvable(std::string(what) + " '" + name + "' comes from a library");
        }
        auto it = table.find(name);
        if (it == table.end()) {
            unresolvable(std::string("unknown ") + what + " '" + name + "'");
        }
        reject_local_tag(*it->second);
        return *it->second;
    }

    static std::string resource_path_name(const std::string& path) {
        auto segments = normalize_path(path, "");
        for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
            if (it->find('{') == std::string::npos) return *it;
        }
        return "";
    }

    Json apply_resource_types(const Json& resource, const std::string& path, std::size_t depth) {
        if (depth > 32) {
            detail::malformed("resource type chain too deep at " + path);
        }
        Json expanded = resource.is_object() ? resource : Json::object();
        const auto* type = member(resource, "type");
        if (type == nullptr || type->is_null()) {
            return expanded;
        }
        for (const auto& reference : references(*type)) {
            Templating templating{reference.parameters};
            templating.values["resourcePath"] = path;
            templating.values["resourcePathName"] = resource_path_name(path);
            auto definition = templating.apply(lookup(resource_types_, reference.name, "resource type"));
            if (!definition.is_object()) {
                continue;
            }
            definition = apply_resource_types(definition, path, depth + 1);
            for (const auto& [key, value] : definition.items()) {
                std::string method = key;
                bool optional = !method.empty() && method.back() == '?';
                if (optional) method.pop_back();
                if (kMethodNames.count(method) != 0) {
                    if (optional && !expanded.contains(method)) continue;
                    if (!expanded.contains(method) || expanded[method].is_null()) {
                        expanded[method] = Json::object();
                    }
                    merge_defaults(expanded[method], value);
                } else if (key == "is") {
                    if (!expanded.contains("is")) {
                        expanded["is"] = value;
                    } else if (expanded["is"].is_array() && value.is_array()) {
                        for (const auto& item : value) expanded["is"].push_back(item);
                    }
                } else if (key != "type" && key != "usage" && key != "description") {
                    if (!expanded.contains(key) || expanded[key].is_null()) {
                        expanded[key] = value;
                    } else {
                        merge_defaults(expanded[key], value);
                    }
                }
            }
        }
        return expanded;
    }

    Json apply_traits(const Json& method, const std::vector<Reference>& traits, const std::string& path,
                      const std::string& method_name) {
        Json expanded = method.is_object() ? method : Json::object();
        for (const auto& reference : traits) {
            Templating templating{reference.parameters};
            templating.values["resourcePath"] = path;
            templating.values["resourcePathName"] = resource_path_name(path);
            templating.values["methodName"] = method_name;
            auto definition = templating.apply(lookup(traits_, reference.name, "trait"));
            if (definition.is_object()) {
                definition.erase("usage");
                merge_defaults(expanded, definition);
            }
        }
        return expanded;
    }

    std::vector<Parameter> read_parameters(const Json* declarations, ParameterLocation location) {
        std::vector<Parameter> out;
        if (declarations == nullptr || declarations->is_null()) {
            return out;
        }
        reject_local_tag(*declarations);
        if (!declarations->is_object()) {
            detail::malformed("parameter declarations must be a map");
        }
        for (const auto& [raw_name, declaration] : declarations->items()) {
            Parameter parameter;
            parameter.name = raw_name;
            parameter.location = location;
            parameter.required = true;
            if (!parameter.name.empty() && parameter.name.back() == '?') {
                parameter.name.pop_back();
                parameter.required = false;
            }
            if (const auto* required = member(declaration, "required"); required && required->is_boolean()) {
                parameter.required = required->get<bool>();
            }
            if (location == ParameterLocation::Path) {
                parameter.required = true;
            }
            parameter.primitive_type = types_.scalar_token(declaration);
            out.push_back(std::move(parameter));
        }
        return out;
    }

    std::vector<Payload> read_body(const Json* body, PayloadDirection direction,
                                   const std::optional<std::string>& status) {
        std::vector<Payload> out;
        if (body == nullptr || body->is_null()) {
            return out;
        }
        reject_local_tag(*body);
        bool keyed_by_media_type = false;
        if (body->is_object()) {
            keyed_by_media_type = std::any_of(body->items().begin(), body->items().end(), [](const auto& item) {
                return item.key().find('/') != std::string::npos;
            });
        }
        if (keyed_by_media_type) {
            for (const auto& [media_type, declaration] : body->items()) {
                auto root = types_.body_root(declaration);
                out.push_back({direction, status, media_type, std::move(root)});
            }
        } else {
            auto root = types_.body_root(*body);
            for (const auto& media_type : default_media_types_) {
                out.push_back({direction, status, media_type, root});
            }
        }
        return out;
    }

    Operation read_method(HttpVerb verb, const Json& method, const std::vector<Parameter>& uri_parameters) {
        Operation operation;
        operation.verb = verb;
        operation.parameters = uri_parameters;
        for (auto& parameter : read_parameters(member(method, "queryParameters"), ParameterLocation::Query)) {
            operation.parameters.push_back(std::move(parameter));
        }
        for (auto& parameter : read_parameters(member(method, "headers"), ParameterLocation::Header)) {
            operation.parameters.push_back(std::move(parameter));
        }
        if (const auto* query_string = member(method, "queryString"); query_string && !query_string->is_null()) {
            auto node = types_.object_of(*query_string);
            for (const auto& child : node.children) {
                std::string token = child.kind == NodeKind::Primitive ? child.primitive_type.value_or("other")
                                                                      : "other";
                operation.parameters.push_back({child.name, ParameterLocation::Query, token, false});
            }
        }
        operation.request_payloads = read_body(member(method, "body"), PayloadDirection::Request, std::nullopt);

        if (const auto* responses = member(method, "responses"); responses && !responses->is_null()) {
            if (!responses->is_object()) {
                detail::malformed("'responses' must be a map");
            }
            for (const auto& [status, response] : responses->items()) {
                auto payloads = read_body(member(response, "body"), PayloadDirection::Response, status);
                if (payloads.empty()) {
                    payloads.push_back({PayloadDirection::Response, status, "", std::nullopt});
                }
                for (auto& payload : payloads) {
                    operation.response_payloads.push_back(std::move(payload));
                }
            }
        }
        return operation;
    }

    void read_resource(ApiDescription& api, const std::string& parent_path, const std::string& relative,
                       const Json& raw, std::vector<Parameter> uri_parameters, std::size_t depth) {
        if (depth > kMaxDepth) {
            detail::malformed("resource nesting exceeds " + std::to_string(kMaxDepth) + " levels");
        }
        reject_local_tag(raw);
        if (!raw.is_null() && !raw.is_object()) {
            detail::malformed("resource " + relative + " must be a map");
        }
        const std::string path = parent_path + relative;
        const auto resource = apply_resource_types(raw, path, 0);

        auto own = read_parameters(member(resource, "uriParameters"), ParameterLocation::Path);
        for (auto& parameter : own) {
            auto existing = std::find_if(uri_parameters.begin(), uri_parameters.end(),
                                         [&](const Parameter& p) { return p.name == parameter.name; });
            if (existing != uri_parameters.end()) {
                *existing = parameter;
            } else {
                uri_parameters.push_back(parameter);
            }
        }

        std::vector<Reference> resource_traits;
        if (const auto* is = member(resource, "is")) {
            resource_traits = references(*is);
        }

        Route route;
        route.path = path;
        for (const auto& [key, value] : resource.items()) {
            auto verb = kMethodNames.count(key) ? parse_verb(key) : std::nullopt;
            if (!verb) {
                continue;
            }
            reject_local_tag(value);
            std::vector<Reference> traits;
            if (const auto* is = member(value, "is")) {
                traits = references(*is);
            }
            traits.insert(traits.end(), resource_traits.begin(), resource_traits.end());
            auto method = apply_traits(value, traits, path, key);
            auto operation = read_method(*verb, method, uri_parameters);
            detail::add_implicit_path_parameters(operation, path);
            route.operations.push_back(std::move(operation));
        }
        api.routes.push_back(std::move(route));

        for (const auto& [key, value] : resource.items()) {
            if (!key.empty() && key[0] == '/') {
                read_resource(api, path, key, value, uri_parameters, depth + 1);
            }
        }
    }

    const Json& root_;
    RamlTypes types_;
    std::vector<std::string> default_media_types_;
    std::map<std::string, const Json*> traits_;
    std::map<std::string, const Json*> resource_types_;
};

void check_header(std::string_view text) {
    text = detail::strip_bom(text);
    auto line = trim(text.substr(0, text.find('\n')));
    if (line.rfind("#%RAML", 0) != 0) {
        detail::malformed("missing '#%RAML' header line");
    }
    auto rest = trim(line.substr(6));
    auto space = rest.find_first_of(" \t");
    auto version = rest.substr(0, space);
    if (version != "1.0") {
        detail::fail(ParseErrorKind::UnsupportedVersion, "RAML version '" + version + "'");
    }
    if (space != std::string::npos) {
        detail::fail(ParseErrorKind::UnsupportedVersion,
                     "RAML fragment '" + trim(rest.substr(space)) + "' is not an API definition");
    }
}

}  // namespace

ApiDescription parse_raml(std::string_view document_text, std::string_view source_file) {
    try {
        check_header(document_text);
        const auto root = detail::load_structured(document_text);
        if (!root.is_object()) {
            detail::malformed("document root must be a map");
        }
        RamlReader reader(root);
        return reader.read(source_file);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(ParseErrorKind::MalformedDocument, e.what());
    }
}

}  // namespace restmetrics
