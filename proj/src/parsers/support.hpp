// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

// Internal helpers shared by the OpenAPI, RAML and WADL parsers.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "restmetrics/model.hpp"
#include "restmetrics/parsers.hpp"

namespace restmetrics::detail {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(ParseErrorKind kind, const std::string& message);

[[noreturn]] inline void malformed(const std::string& message) {
    fail(ParseErrorKind::MalformedDocument, message);
}

[[nodiscard]] std::string_view strip_bom(std::string_view text);

/**
 * Parses JSON or YAML text into a JSON value. YAML plain scalars are resolved
 * with the YAML 1.2 core schema; quoted scalars stay strings. Nodes with a
 * local tag such as `!include x` become `{"!include": "x"}` so callers can
 * reject them where they matter.
 */
[[nodiscard]] Json load_structured(std::string_view text);

/// Key of the marker object produced for `!include` and other local tags.
[[nodiscard]] std::optional<std::string> local_tag_reference(const Json& value);

[[nodiscard]] const Json* member(const Json& object, std::string_view key);

/// Text of a scalar; numbers and booleans are rendered, null gives "".
[[nodiscard]] std::string scalar_text(const Json& value);

/// Path component of an absolute or relative URL, without trailing slash.
[[nodiscard]] std::string url_path(std::string_view url);

/// Names inside `{...}` markers of a path segment, e.g. "{id}.json" -> {"id"}.
[[nodiscard]] std::vector<std::string> template_names(std::string_view segment);

/// Adds a required string PATH parameter for every undeclared template name.
void add_implicit_path_parameters(Operation& operation, std::string_view path);

/// Merges @p inherited into @p parameters; entries already present win.
void merge_parameters(std::vector<Parameter>& parameters, const std::vector<Parameter>& inherited);

/**
 * Converts JSON Schema (OpenAPI flavour) into DataNode trees.
 *
 * `$ref` values are resolved against the document the converter was built
 * with; only fragment references (`#/...`) are accepted. A reference that is
 * already being expanded on the current branch becomes a REFERENCE_CYCLE node.
 */
class SchemaConverter {
public:
    explicit SchemaConverter(const Json& document, std::size_t node_budget = 1'000'000);

    /// nullopt when the schema places no constraint on the body (opaque payload).
    [[nodiscard]] std::optional<DataNode> convert_root(const Json& schema);

    [[nodiscard]] DataNode convert(const Json& schema, const std::string& name);

    /// Normalized primitive token of a parameter schema ("other" for arrays/objects).
    [[nodiscard]] std::string type_token(const Json& schema, std::size_t depth = 0);

    /// Follows `$ref` chains; throws UnresolvableReference for external or dangling refs.
    [[nodiscard]] const Json& resolve(const Json& value);

private:
    DataNode convert_impl(const Json& schema, const std::string& name, std::size_t depth);
    DataNode convert_resolved(const Json& schema, const std::string& name, std::size_t depth);
    void merge_into(DataNode& target, DataNode part);
    void charge();

    const Json& document_;
    std::size_t budget_;
    std::size_t used_{0};
    std::vector<std::string> ref_stack_;
};

/// Resolves a `#/a/b` fragment pointer inside @p document.
[[nodiscard]] const Json& resolve_pointer(const Json& document, const std::string& reference);

}  // namespace restmetrics::detail
