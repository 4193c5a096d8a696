// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <utility>

#include "restmetrics/parsers.hpp"
#include "support.hpp"

namespace restmetrics {

namespace {

using detail::Json;
using detail::member;
using detail::scalar_text;

constexpr const char* kDefaultMediaType = "application/json";

enum class Dialect { Swagger2, OpenApi3 };

bool is_form_media_type(const std::string& media_type) {
    return media_type == "application/x-www-form-urlencoded" || media_type == "multipart/form-data";
}

std::vector<std::string> media_types(const Json* declared, const std::vector<std::string>& fallback) {
    if (declared == nullptr || !declared->is_array()) {
        return fallback;
    }
    std::vector<std::string> out;
    for (const auto& item : *declared) {
        if (item.is_string() && std::find(out.begin(), out.end(), item.get<std::string>()) == out.end()) {
            out.push_back(item.get<std::string>());
        }
    }
    return out.empty() ? fallback : out;
}

ParameterLocation location_of(const std::string& in) {
    if (in == "path") return ParameterLocation::Path;
    if (in == "query") return ParameterLocation::Query;
    if (in == "header") return ParameterLocation::Header;
    if (in == "cookie") return ParameterLocation::Cookie;
    return ParameterLocation::Other;
}

class OpenApiReader {
public:
    OpenApiReader(const Json& doc, Dialect dialect)
        : doc_(doc), dialect_(dialect), schemas_(doc) {
        if (dialect_ == Dialect::Swagger2) {
            consumes_ = media_types(member(doc_, "consumes"), {kDefaultMediaType});
            produces_ = media_types(member(doc_, "produces"), {kDefaultMediaType});
        }
    }

    ApiDescription read(std::string_view source_file) {
        ApiDescription api;
        api.source_format = SourceFormat::OpenApi;
        api.source_file = std::string(source_file);
        if (const auto* info = member(doc_, "info")) {
            if (const auto* title = member(*info, "title")) api.title = scalar_text(*title);
            if (const auto* version = member(*info, "version")) api.version = scalar_text(*version);
        }
        api.base_path = base_path();

        const auto* paths = member(doc_, "paths");
        if (paths == nullptr || paths->is_null()) {
            return normalize(std::move(api));
        }
        if (!paths->is_object()) {
            detail::malformed("'paths' must be a map");
        }
        for (const auto& [path, raw_item] : paths->items()) {
            if (path.empty() || path[0] != '/') {
                continue;  // x- extensions
            }
            api.routes.push_back(read_route(path, resolve_object(raw_item, "path item " + path)));
        }
        return normalize(std::move(api));
    }

private:
    std::string base_path() const {
        if (dialect_ == Dialect::Swagger2) {
            const auto* base = member(doc_, "basePath");
            return base ? detail::url_path(scalar_text(*base)) : std::string();
        }
        const auto* servers = member(doc_, "servers");
        if (servers == nullptr || !servers->is_array() || servers->empty()) {
            return "";
        }
        const auto& server = (*servers)[0];
        const auto* url = member(server, "url");
        if (url == nullptr) {
            return "";
        }
        auto text = scalar_text(*url);
        if (const auto* variables = member(server, "variables"); variables && variables->is_object()) {
            for (const auto& [name, variable] : variables->items()) {
                const auto* fallback = member(variable, "default");
                const auto marker = "{" + name + "}";
                for (auto pos = text.find(marker); fallback && pos != std::string::npos;
                     pos = text.find(marker)) {
                    text.replace(pos, marker.size(), scalar_text(*fallback));
                }
            }
        }
        return detail::url_path(text);
    }

    const Json& resolve_object(const Json& value, const std::string& what) {
        const auto& target = schemas_.resolve(value);
        if (!target.is_object()) {
            detail::malformed(what + " must be a map");
        }
        return target;
    }

    Route read_route(const std::string& path, const Json& item) {
        Route route;
        route.path = path;

        std::vector<const Json*> shared_parameters;
        if (const auto* parameters = member(item, "parameters")) {
            collect_parameters(*parameters, shared_parameters);
        }

        for (const auto& [key, value] : item.items()) {
            auto verb = parse_verb(key);
            if (!verb || key == "parameters") {
                continue;
            }
            const auto& operation = resolve_object(value, key + " " + path);
            route.operations.push_back(read_operation(*verb, path, operation, shared_parameters));
        }
        return route;
    }

    void collect_parameters(const Json& list, std::vector<const Json*>& out) {
        if (!list.is_array()) {
            detail::malformed("'parameters' must be a list");
        }
        for (const auto& entry : list) {
            out.push_back(&resolve_object(entry, "parameter"));
        }
    }

    static std::pair<std::string, std::string> parameter_key(const Json& parameter) {
        const auto* name = member(parameter, "name");
        const auto* in = member(parameter, "in");
        return {name ? scalar_text(*name) : "", in ? scalar_text(*in) : ""};
    }

    Operation read_operation(HttpVerb verb, const std::string& path, const Json& source,
                             const std::vector<const Json*>& shared_parameters) {
        Operation operation;
        operation.verb = verb;
        if (const auto* id = member(source, "operationId")) {
            operation.operation_id = scalar_text(*id);
        }

        // Operation-level declarations override path-level ones with the same (name, in).
        std::vector<const Json*> parameters;
        if (const auto* own = member(source, "parameters")) {
            collect_parameters(*own, parameters);
        }
        for (const auto* shared : shared_parameters) {
            auto key = parameter_key(*shared);
            bool overridden = std::any_of(parameters.begin(), parameters.end(),
                                          [&](const Json* p) { return parameter_key(*p) == key; });
            if (!overridden) {
                parameters.push_back(shared);
            }
        }

        const auto consumes =
            dialect_ == Dialect::Swagger2 ? media_types(member(source, "consumes"), consumes_)
                                          : std::vector<std::string>{};
        const auto produces =
            dialect_ == Dialect::Swagger2 ? media_types(member(source, "produces"), produces_)
                                          : std::vector<std::string>{};

        std::vector<const Json*> form_fields;
        for (const auto* parameter : parameters) {
            auto [name, in] = parameter_key(*parameter);
            if (dialect_ == Dialect::Swagger2 && in == "body") {
                const auto* schema = member(*parameter, "schema");
                for (const auto& media_type : consumes) {
                    auto root = schema ? schemas_.convert_root(*schema) : std::nullopt;
                    operation.request_payloads.push_back(
                        {PayloadDirection::Request, std::nullopt, media_type, std::move(root)});
                }
                continue;
            }
            if (dialect_ == Dialect::Swagger2 && in == "formData") {
                form_fields.push_back(parameter);
                continue;
            }
            operation.parameters.push_back(read_parameter(name, in, *parameter));
        }
        if (!form_fields.empty()) {
            add_form_payloads(operation, form_fields, consumes);
        }

        if (dialect_ == Dialect::OpenApi3) {
            if (const auto* body = member(source, "requestBody")) {
                const auto& request = resolve_object(*body, "requestBody");
                if (const auto* content = member(request, "content")) {
                    for (auto& payload : read_content(*content, PayloadDirection::Request, std::nullopt)) {
                        operation.request_payloads.push_back(std::move(payload));
                    }
                }
            }
        }

        if (const auto* responses = member(source, "responses")) {
            if (!responses->is_object()) {
                detail::malformed("'responses' must be a map");
            }
            for (const auto& [status, raw_response] : responses->items()) {
                if (status.rfind("x-", 0) == 0) {
                    continue;
                }
                const auto& response = resolve_object(raw_response, "response " + status);
                read_response(operation, status, response, produces);
            }
        }

        detail::add_implicit_path_parameters(operation, path);
        return operation;
    }

    Parameter read_parameter(const std::string& name, const std::string& in, const Json& source) {
        Parameter parameter;
        parameter.name = name;
        parameter.location = location_of(in);
        if (const auto* required = member(source, "required"); required && required->is_boolean()) {
            parameter.required = required->get<bool>();
        }
        if (parameter.location == ParameterLocation::Path) {
            parameter.required = true;
        }
        if (dialect_ == Dialect::Swagger2) {
            const auto* type = member(source, "type");
            parameter.primitive_type = type ? schemas_.type_token(source) : "other";
        } else if (const auto* schema = member(source, "schema")) {
            parameter.primitive_type = schemas_.type_token(*schema);
        } else if (const auto* content = member(source, "content"); content && content->is_object() &&
                                                                     !content->empty()) {
            const auto* media_schema = member(content->begin().value(), "schema");
            parameter.primitive_type = media_schema ? schemas_.type_token(*media_schema) : "other";
        } else {
            parameter.primitive_type = "other";
        }
        return parameter;
    }

    void add_form_payloads(Operation& operation, const std::vector<const Json*>& fields,
                           const std::vector<std::string>& consumes) {
        auto root = DataNode::object("");
        for (const auto* field : fields) {
            auto [name, in] = parameter_key(*field);
            root.children.push_back(schemas_.convert(*field, name));
        }
        std::vector<std::string> form_types;
        std::copy_if(consumes.begin(), consumes.end(), std::back_inserter(form_types), is_form_media_type);
        if (form_types.empty()) {
            form_types.emplace_back("application/x-www-form-urlencoded");
        }
        for (const auto& media_type : form_types) {
            operation.request_payloads.push_back({PayloadDirection::Request, std::nullopt, media_type, root});
        }
    }

    std::vector<Payload> read_content(const Json& content, PayloadDirection direction,
                                      const std::optional<std::string>& status) {
        if (!content.is_object()) {
            detail::malformed("'content' must be a map");
        }
        std::vector<Payload> payloads;
        for (const auto& [media_type, media] : content.items()) {
            const auto* schema = member(media, "schema");
            // Convert before building the Payload: GCC 11 leaks already-built
            // members when an aggregate initializer throws.
            auto root = schema ? schemas_.convert_root(*schema) : std::nullopt;
            payloads.push_back({direction, status, media_type, std::move(root)});
        }
        return payloads;
    }

    void read_response(Operation& operation, const std::string& status, const Json& response,
                       const std::vector<std::string>& produces) {
        if (dialect_ == Dialect::OpenApi3) {
            const auto* content = member(response, "content");
            if (content != nullptr && content->is_object() && !content->empty()) {
                for (auto& payload : read_content(*content, PayloadDirection::Response, status)) {
                    operation.response_payloads.push_back(std::move(payload));
                }
                return;
            }
        } else if (const auto* schema = member(response, "schema")) {
            auto root = schemas_.convert_root(*schema);
            for (const auto& media_type : produces) {
                operation.response_payloads.push_back({PayloadDirection::Response, status, media_type, root});
            }
            return;
        }
        operation.response_payloads.push_back({PayloadDirection::Response, status, "", std::nullopt});
    }

    const Json& doc_;
    Dialect dialect_;
    detail::SchemaConverter schemas_;
    std::vector<std::string> consumes_;
    std::vector<std::string> produces_;
};

Dialect dialect_of(const Json& doc) {
    if (const auto* openapi = member(doc, "openapi")) {
        auto version = scalar_text(*openapi);
        if (version == "3" || version.rfind("3.", 0) == 0) {
            return Dialect::OpenApi3;
        }
        detail::fail(ParseErrorKind::UnsupportedVersion, "openapi version '" + version + "'");
    }
    if (const auto* swagger = member(doc, "swagger")) {
        auto version = scalar_text(*swagger);
        if (version == "2" || version == "2.0") {
            return Dialect::Swagger2;
        }
        detail::fail(ParseErrorKind::UnsupportedVersion, "swagger version '" + version + "'");
    }
    detail::malformed("no top-level 'openapi' or 'swagger' key");
}

}  // namespace

ApiDescription parse_openapi(std::string_view document_text, std::string_view source_file) {
    try {
        const auto doc = detail::load_structured(document_text);
        if (!doc.is_object()) {
            detail::malformed("document root must be a map");
        }
        OpenApiReader reader(doc, dialect_of(doc));
        return reader.read(source_file);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(ParseErrorKind::MalformedDocument, e.what());
    }
}

}  // namespace restmetrics
