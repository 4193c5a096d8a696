// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file model.hpp
 * @brief Format-independent representation of a RESTful API.
 *
 * Every parser produces an ApiDescription and every metric consumes one.
 * Values are plain aggregates; once normalize() has run they are treated as
 * immutable and may be shared freely between threads.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace restmetrics {

enum class SourceFormat { OpenApi, Raml, Wadl };

enum class HttpVerb { Get, Post, Put, Delete, Patch, Head, Options };

enum class ParameterLocation { Path, Query, Header, Cookie, Matrix, Other };

enum class PayloadDirection { Request, Response };

enum class NodeKind { Object, Array, Primitive, ReferenceCycle };

[[nodiscard]] std::string_view to_string(SourceFormat format);
[[nodiscard]] std::string_view to_string(HttpVerb verb);
[[nodiscard]] std::string_view to_string(ParameterLocation location);
[[nodiscard]] std::string_view to_string(NodeKind kind);

/// Case-insensitive; returns nullopt for verbs outside the supported set
/// (TRACE, CONNECT, extensions).
[[nodiscard]] std::optional<HttpVerb> parse_verb(std::string_view text);

/// Recursive payload schema node. Children are kept in declaration order.
struct DataNode {
    std::string name;  ///< Property name; empty for anonymous roots and array items
    NodeKind kind{NodeKind::Primitive};
    std::optional<std::string> primitive_type;  ///< Present iff kind == Primitive
    std::vector<DataNode> children;

    static DataNode primitive(std::string name, std::string type);
    static DataNode object(std::string name, std::vector<DataNode> children = {});
    static DataNode array(std::string name, DataNode item);
    static DataNode cycle(std::string name);

    friend bool operator==(const DataNode&, const DataNode&) = default;
};

struct Parameter {
    std::string name;
    ParameterLocation location{ParameterLocation::Query};
    std::string primitive_type{"string"};
    bool required{false};

    friend bool operator==(const Parameter&, const Parameter&) = default;
};

struct Payload {
    PayloadDirection direction{PayloadDirection::Response};
    std::optional<std::string> status_code;  ///< Present iff direction == Response
    std::string media_type;
    std::optional<DataNode> root;  ///< Absent for empty or opaque bodies

    friend bool operator==(const Payload&, const Payload&) = default;
};

struct Operation {
    HttpVerb verb{HttpVerb::Get};
    std::optional<std::string> operation_id;
    std::vector<Parameter> parameters;
    std::vector<Payload> request_payloads;
    std::vector<Payload> response_payloads;

    friend bool operator==(const Operation&, const Operation&) = default;
};

struct Route {
    std::string path;  ///< Normalized, base path excluded, e.g. "/customers/{id}"
    std::vector<std::string> segments;
    std::vector<Operation> operations;

    friend bool operator==(const Route&, const Route&) = default;
};

struct ApiDescription {
    std::string title;
    std::string version;
    SourceFormat source_format{SourceFormat::OpenApi};
    std::string source_file;
    std::string base_path;
    std::vector<Route> routes;

    friend bool operator==(const ApiDescription&, const ApiDescription&) = default;
};

/// Order-insensitive canonical serialization of a payload structure.
struct StructuralFingerprint {
    std::string canonical_form;

    [[nodiscard]] bool empty() const { return canonical_form == kEmpty; }

    static constexpr std::string_view kEmpty = "EMPTY";

    friend auto operator<=>(const StructuralFingerprint&, const StructuralFingerprint&) = default;
};

/**
 * Splits @p raw_path into segments after removing @p base_path.
 *
 * The base path is removed only when it is a whole-segment prefix. Empty
 * segments and trailing slashes are dropped; template markers such as
 * `{id}` stay single segments.
 */
[[nodiscard]] std::vector<std::string> normalize_path(std::string_view raw_path,
                                                      std::string_view base_path);

/// Joins segments back into "/a/b"; zero segments give "/".
[[nodiscard]] std::string join_segments(const std::vector<std::string>& segments);

/// Maps a format-specific type name onto string/integer/number/boolean/file/other.
[[nodiscard]] std::string normalize_type_token(std::string_view type_name);

[[nodiscard]] StructuralFingerprint fingerprint(const Payload& payload);
[[nodiscard]] StructuralFingerprint fingerprint(const std::optional<DataNode>& root);

/// PRIMITIVE nodes plus REFERENCE_CYCLE nodes (each cycle counts as one leaf).
[[nodiscard]] std::size_t leaf_count(const DataNode& node);

/// Every node of every kind, root included.
[[nodiscard]] std::size_t node_count(const DataNode& node);

/// A typed leaf of a payload tree, addressed by its property path.
struct LeafToken {
    std::string path;  ///< "/a/b" for properties, "[]" appended for array items
    std::string type;  ///< primitive type token, or "cycle"

    friend auto operator<=>(const LeafToken&, const LeafToken&) = default;
};

[[nodiscard]] std::vector<LeafToken> leaf_tokens(const DataNode& node);

/**
 * Brings a freshly built description into canonical shape: recomputes
 * segments and path strings, merges routes that normalize to the same path,
 * drops routes without operations, deduplicates verbs and (name, location)
 * parameter pairs, and sorts routes, operations, parameters and payloads.
 */
[[nodiscard]] ApiDescription normalize(ApiDescription api);

/// Lists every violated model invariant; an empty result means the value is well formed.
[[nodiscard]] std::vector<std::string> check_invariants(const ApiDescription& api);

[[nodiscard]] std::size_t operation_count(const ApiDescription& api);

}  // namespace restmetrics
