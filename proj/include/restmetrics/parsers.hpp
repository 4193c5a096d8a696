// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file parsers.hpp
 * @brief Conversion of OpenAPI, RAML and WADL documents into the canonical model.
 *
 * All parsers are pure functions of their input text. Failures are reported
 * as ParseError; no other exception type escapes a parse_* entry point.
 * References to other files or URLs are never fetched.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "restmetrics/model.hpp"

namespace restmetrics {

enum class DetectedFormat { OpenApi, Raml, Wadl, Unknown };

[[nodiscard]] std::string_view to_string(DetectedFormat format);

struct FormatGuess {
    DetectedFormat format{DetectedFormat::Unknown};
    std::string confidence_reason;
};

enum class ParseErrorKind { MalformedDocument, UnsupportedVersion, UnresolvableReference };

[[nodiscard]] std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, const std::string& message);

    [[nodiscard]] ParseErrorKind kind() const noexcept { return kind_; }

private:
    ParseErrorKind kind_;
};

/**
 * Guesses the description language from content.
 *
 * OpenAPI needs a top-level `openapi` or `swagger` key, RAML a `#%RAML`
 * first line, WADL a root `application` element in the WADL namespace. The
 * file extension only breaks ties between several matching rules.
 */
[[nodiscard]] FormatGuess detect_format(std::string_view document_text,
                                        std::string_view file_name);

/// OpenAPI 3.x or Swagger 2.0, JSON or YAML encoded.
[[nodiscard]] ApiDescription parse_openapi(std::string_view document_text,
                                           std::string_view source_file);

/// RAML 1.0.
[[nodiscard]] ApiDescription parse_raml(std::string_view document_text,
                                        std::string_view source_file);

/// WADL (2009 namespace; the 2006 draft namespace is accepted as well).
[[nodiscard]] ApiDescription parse_wadl(std::string_view document_text,
                                        std::string_view source_file);

/// Dispatches on @p format; DetectedFormat::Unknown raises MalformedDocument.
[[nodiscard]] ApiDescription parse_document(DetectedFormat format,
                                            std::string_view document_text,
                                            std::string_view source_file);

}  // namespace restmetrics
