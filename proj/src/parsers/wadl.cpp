// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "restmetrics/parsers.hpp"
#include "support.hpp"

namespace restmetrics {

namespace {

namespace pt = boost::property_tree;

constexpr std::size_t kMaxDepth = 256;

const char* const kWadlNamespaces[] = {"http://wadl.dev.java.net/2009/02",
                                       "http://research.sun.com/wadl/2006/10"};

bool is_wadl_namespace(const std::string& uri) {
    return std::any_of(std::begin(kWadlNamespaces), std::end(kWadlNamespaces),
                       [&](const char* ns) { return uri == ns; });
}

std::string attribute(const pt::ptree& element, const std::string& name, const std::string& fallback = "") {
    if (auto attributes = element.get_child_optional("<xmlattr>")) {
        if (auto value = attributes->get_optional<std::string>(pt::ptree::path_type(name, '\0'))) {
            return *value;
        }
    }
    return fallback;
}

std::vector<std::string> split_whitespace(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    for (std::string word; in >> word;) out.push_back(word);
    return out;
}

// Builds nested objects from representation params whose `path` (or name)
// spells the location: "a/b" is property b of object a, "items[]/x" is
// property x of the objects in array items, a leading "[]" makes the root an array.
class RepresentationBuilder {
public:
    void add(const std::string& location, const std::string& type, bool repeating) {
        auto parts = normalize_path(location, "");
        if (parts.empty()) {
            return;
        }
        std::size_t start = 0;
        if (parts[0] == "[]") {
            if (!root_array_ && !root_.children.empty()) {
                detail::malformed("representation mixes array and object roots");
            }
            root_array_ = true;
            start = 1;
        } else if (root_array_) {
            detail::malformed("representation mixes array and object roots");
        }
        DataNode* current = &root_;
        for (std::size_t i = start; i < parts.size(); ++i) {
            const bool last = i + 1 == parts.size();
            std::string name = parts[i];
            bool array_of_objects = name.size() > 2 && name.compare(name.size() - 2, 2, "[]") == 0;
            if (array_of_objects) {
                name.resize(name.size() - 2);
            }
            if (last && !array_of_objects) {
                auto leaf = DataNode::primitive(name, normalize_type_token(type));
                if (repeating) {
                    leaf = DataNode::array(name, DataNode::primitive("", normalize_type_token(type)));
                }
                if (find(*current, name) != nullptr) {
                    detail::malformed("duplicate representation property '" + location + "'");
                }
                current->children.push_back(std::move(leaf));
                return;
            }
            DataNode* next = find(*current, name);
            if (next == nullptr) {
                current->children.push_back(array_of_objects ? DataNode::array(name, DataNode::object(""))
                                                             : DataNode::object(name));
                next = &current->children.back();
            } else if ((next->kind == NodeKind::Array) != array_of_objects ||
                       (next->kind != NodeKind::Array && next->kind != NodeKind::Object)) {
                detail::malformed("conflicting representation property '" + location + "'");
            }
            current = next->kind == NodeKind::Array ? &next->children.front() : next;
        }
    }

    std::optional<DataNode> build() const {
        if (root_.children.empty()) {
            return std::nullopt;
        }
        if (root_array_) {
            return DataNode::array("", root_);
        }
        return root_;
    }

private:
    static DataNode* find(DataNode& parent, const std::string& name) {
        auto it = std::find_if(parent.children.begin(), parent.children.end(),
                               [&](const DataNode& c) { return c.name == name; });
        return it == parent.children.end() ? nullptr : &*it;
    }

    DataNode root_ = DataNode::object("");
    bool root_array_ = false;
};

class WadlReader {
public:
    WadlReader(const pt::ptree& application, std::string prefix)
        : application_(application), prefix_(std::move(prefix)) {
        for (const auto& [tag, child] : application_) {
            auto id = attribute(child, "id");
            if (id.empty()) continue;
            if (tag == q("method")) methods_[id] = &child;
            if (tag == q("representation")) representations_[id] = &child;
            if (tag == q("param")) params_[id] = &child;
            if (tag == q("resource_type")) resource_types_[id] = &child;
        }
    }

    ApiDescription read(std::string_view source_file) {
        ApiDescription api;
        api.source_format = SourceFormat::Wadl;
        api.source_file = std::string(source_file);
        for (const auto& [tag, child] : application_) {
            if (tag == q("doc") && api.title.empty()) {
                api.title = attribute(child, "title");
            }
        }
        bool first = true;
        for (const auto& [tag, resources] : application_) {
            if (tag != q("resources")) continue;
            if (first) {
                api.base_path = detail::url_path(attribute(resources, "base"));
                first = false;
            }
            for (const auto& [child_tag, resource] : resources) {
                if (child_tag == q("resource")) {
                    read_resource(api, "", resource, {}, 0);
                }
            }
        }
        return normalize(std::move(api));
    }

private:
    std::string q(const char* local) const { return prefix_.empty() ? local : prefix_ + ":" + local; }

    const pt::ptree& deref(const pt::ptree& element, const std::map<std::string, const pt::ptree*>& table,
                           const char* what) const {
        auto href = attribute(element, "href");
        if (href.empty()) {
            return element;
        }
        if (href[0] != '#') {
            detail::fail(ParseErrorKind::UnresolvableReference, std::string(what) + " '" + href + "'");
        }
        auto it = table.find(href.substr(1));
        if (it == table.end()) {
            detail::fail(ParseErrorKind::UnresolvableReference, std::string("dangling ") + what + " '" + href + "'");
        }
        return *it->second;
    }

    Parameter read_parameter(const pt::ptree& raw, ParameterLocation location) const {
        const auto& element = deref(raw, params_, "param");
        Parameter parameter;
        parameter.name = attribute(element, "name");
        parameter.location = location;
        parameter.required = attribute(element, "required", "false") == "true";
        parameter.primitive_type = attribute(element, "repeating") == "true"
                                       ? "other"
                                       : normalize_type_token(attribute(element, "type", "xs:string"));
        if (location == ParameterLocation::Path) {
            parameter.required = true;
        }
        return parameter;
    }

    static std::optional<ParameterLocation> location_of(const std::string& style) {
        if (style == "template") return ParameterLocation::Path;
        if (style == "query") return ParameterLocation::Query;
        if (style == "header") return ParameterLocation::Header;
        if (style == "matrix") return ParameterLocation::Matrix;
        return std::nullopt;
    }

    std::vector<Parameter> params_of(const pt::ptree& element, bool inherited_only) const {
        std::vector<Parameter> out;
        for (const auto& [tag, child] : element) {
            if (tag != q("param")) continue;
            const auto& param = deref(child, params_, "param");
            auto location = location_of(attribute(param, "style"));
            if (!location) continue;
            bool inherits = *location == ParameterLocation::Path || *location == ParameterLocation::Matrix;
            if (inherited_only == inherits) {
                out.push_back(read_parameter(child, *location));
            }
        }
        return out;
    }

    std::optional<DataNode> structure_of(const pt::ptree& representation) const {
        RepresentationBuilder builder;
        for (const auto& [tag, child] : representation) {
            if (tag != q("param")) continue;
            const auto& param = deref(child, params_, "param");
            if (attribute(param, "style", "plain") != "plain") continue;
            auto location = attribute(param, "path");
            if (location.empty()) location = attribute(param, "name");
            builder.add(location, attribute(param, "type", "xs:string"), attribute(param, "repeating") == "true");
        }
        return builder.build();
    }

    std::vector<Payload> representations_of(const pt::ptree& element, PayloadDirection direction,
                                            const std::optional<std::string>& status) const {
        std::vector<Payload> out;
        for (const auto& [tag, child] : element) {
            if (tag != q("representation")) continue;
            const auto& representation = deref(child, representations_, "representation");
            auto media_type = attribute(representation, "mediaType");
            auto root = structure_of(representation);
            out.push_back({direction, status, std::move(media_type), std::move(root)});
        }
        return out;
    }

    Operation read_method(const pt::ptree& raw, const std::vector<Parameter>& resource_parameters) const {
        const auto& method = deref(raw, methods_, "method");
        auto verb = parse_verb(attribute(method, "name"));
        if (!verb) {
            detail::malformed("unsupported method '" + attribute(method, "name") + "'");
        }
        Operation operation;
        operation.verb = *verb;
        if (auto id = attribute(method, "id"); !id.empty()) {
            operation.operation_id = id;
        }
        for (const auto& [tag, child] : method) {
            if (tag == q("request")) {
                for (const auto& [param_tag, param] : child) {
                    if (param_tag != q("param")) continue;
                    auto location = location_of(attribute(deref(param, params_, "param"), "style"));
                    if (location) operation.parameters.push_back(read_parameter(param, *location));
                }
                for (auto& payload : representations_of(child, PayloadDirection::Request, std::nullopt)) {
                    operation.request_payloads.push_back(std::move(payload));
                }
            } else if (tag == q("response")) {
                auto statuses = split_whitespace(attribute(child, "status", "200"));
                if (statuses.empty()) statuses.emplace_back("200");
                for (const auto& status : statuses) {
                    auto payloads = representations_of(child, PayloadDirection::Response, status);
                    if (payloads.empty()) {
                        payloads.push_back({PayloadDirection::Response, status, "", std::nullopt});
                    }
                    for (auto& payload : payloads) operation.response_payloads.push_back(std::move(payload));
                }
            }
        }
        detail::merge_parameters(operation.parameters, resource_parameters);
        return operation;
    }

    // Collects the element's own children followed by those of referenced resource types.
    std::vector<const pt::ptree*> facets(const pt::ptree& resource) const {
        std::vector<const pt::ptree*> out{&resource};
        for (const auto& reference : split_whitespace(attribute(resource, "type"))) {
            if (reference[0] != '#') {
                detail::fail(ParseErrorKind::UnresolvableReference, "resource_type '" + reference + "'");
            }
            auto it = resource_types_.find(reference.substr(1));
            if (it == resource_types_.end()) {
                detail::fail(ParseErrorKind::UnresolvableReference, "dangling resource_type '" + reference + "'");
            }
            out.push_back(it->second);
        }
        return out;
    }

    void read_resource(ApiDescription& api, const std::string& parent_path, const pt::ptree& resource,
                       std::vector<Parameter> inherited, std::size_t depth) const {
        if (depth > kMaxDepth) {
            detail::malformed("resource nesting exceeds " + std::to_string(kMaxDepth) + " levels");
        }
        const std::string path = parent_path + "/" + attribute(resource, "path");
        const auto parts = facets(resource);

        std::vector<Parameter> own_inherited;
        std::vector<Parameter> local;
        for (const auto* part : parts) {
            for (auto& p : params_of(*part, true)) own_inherited.push_back(std::move(p));
            for (auto& p : params_of(*part, false)) local.push_back(std::move(p));
        }
        detail::merge_parameters(own_inherited, inherited);
        std::vector<Parameter> method_defaults = local;
        detail::merge_parameters(method_defaults, own_inherited);

        Route route;
        route.path = path;
        for (const auto* part : parts) {
            for (const auto& [tag, child] : *part) {
                if (tag == q("method")) {
                    auto operation = read_method(child, method_defaults);
                    detail::add_implicit_path_parameters(operation, path);
                    route.operations.push_back(std::move(operation));
                }
            }
        }
        api.routes.push_back(std::move(route));

        for (const auto* part : parts) {
            for (const auto& [tag, child] : *part) {
                if (tag == q("resource")) {
                    read_resource(api, path, child, own_inherited, depth + 1);
                }
            }
        }
    }

    const pt::ptree& application_;
    std::string prefix_;
    std::map<std::string, const pt::ptree*> methods_;
    std::map<std::string, const pt::ptree*> representations_;
    std::map<std::string, const pt::ptree*> params_;
    std::map<std::string, const pt::ptree*> resource_types_;
};

}  // namespace

ApiDescription parse_wadl(std::string_view document_text, std::string_view source_file) {
    try {
        pt::ptree document;
        std::istringstream in{std::string(detail::strip_bom(document_text))};
        try {
            pt::read_xml(in, document, pt::xml_parser::no_comments);
        } catch (const pt::xml_parser_error& e) {
            detail::malformed(std::string("invalid XML: ") + e.what());
        }

        const pt::ptree* root = nullptr;
        std::string root_tag;
        for (const auto& [tag, child] : document) {
            if (tag != "<xmlcomment>") {
                root = &child;
                root_tag = tag;
                break;
            }
        }
        if (root == nullptr) {
            detail::malformed("no root element");
        }
        std::string prefix;
        std::string local = root_tag;
        if (auto colon = root_tag.find(':'); colon != std::string::npos) {
            prefix = root_tag.substr(0, colon);
            local = root_tag.substr(colon + 1);
        }
        const auto ns = attribute(*root, prefix.empty() ? "xmlns" : "xmlns:" + prefix);
        if (local != "application" || !is_wadl_namespace(ns)) {
            detail::malformed("root element is not a WADL <application>");
        }
        WadlReader reader(*root, prefix);
        return reader.read(source_file);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(ParseErrorKind::MalformedDocument, e.what());
    }
}

}  // namespace restmetrics
