// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "restmetrics/parsers.hpp"
#include "support.hpp"

namespace restmetrics {

std::string_view to_string(DetectedFormat format) {
    switch (format) {
        case DetectedFormat::OpenApi: return "OPENAPI";
        case DetectedFormat::Raml: return "RAML";
        case DetectedFormat::Wadl: return "WADL";
        case DetectedFormat::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

namespace {

std::string extension_of(std::string_view file_name) {
    auto slash = file_name.find_last_of("/\\");
    if (slash != std::string_view::npos) file_name.remove_prefix(slash + 1);
    auto dot = file_name.rfind('.');
    if (dot == std::string_view::npos) return "";
    std::string ext(file_name.substr(dot + 1));
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext;
}

std::optional<DetectedFormat> format_for_extension(const std::string& ext) {
    if (ext == "raml") return DetectedFormat::Raml;
    if (ext == "wadl" || ext == "xml") return DetectedFormat::Wadl;
    if (ext == "json" || ext == "yaml" || ext == "yml") return DetectedFormat::OpenApi;
    return std::nullopt;
}

bool raml_header(std::string_view text) {
    return text.substr(0, 6) == "#%RAML";
}

// `"openapi"` or `"swagger"` followed by optional blanks and a colon.
bool quoted_key_anywhere(std::string_view text) {
    for (std::string_view key : {"\"openapi\"", "\"swagger\""}) {
        for (auto pos = text.find(key); pos != std::string_view::npos; pos = text.find(key, pos + 1)) {
            auto next = text.find_first_not_of(" \t\r\n", pos + key.size());
            if (next != std::string_view::npos && text[next] == ':') {
                return true;
            }
        }
    }
    return false;
}

// YAML: a key at column zero, optionally quoted.
bool yaml_top_level_key(std::string_view text) {
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        auto line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        if (!line.empty() && (line[0] == '"' || line[0] == '\'')) {
            line.remove_prefix(1);
        }
        for (std::string_view key : {"openapi", "swagger"}) {
            if (line.substr(0, key.size()) == key) {
                auto rest = line.substr(key.size());
                if (!rest.empty() && (rest[0] == '"' || rest[0] == '\'')) rest.remove_prefix(1);
                auto colon = rest.find_first_not_of(" \t");
                if (colon != std::string_view::npos && rest[colon] == ':') {
                    return true;
                }
            }
        }
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return false;
}

bool openapi_key(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return false;
    }
    if (text[first] == '{') {
        try {
            auto doc = detail::Json::parse(text);
            return doc.is_object() && (doc.contains("openapi") || doc.contains("swagger"));
        } catch (const std::exception&) {
            // Broken JSON still announces itself; the parser will report the defect.
            return quoted_key_anywhere(text);
        }
    }
    return yaml_top_level_key(text);
}

// Returns (local name, namespace URI) of the first element, or nullopt if none.
std::optional<std::pair<std::string, std::string>> root_element(std::string_view text) {
    std::size_t pos = 0;
    while (true) {
        pos = text.find('<', pos);
        if (pos == std::string_view::npos || pos + 1 >= text.size()) {
            return std::nullopt;
        }
        if (text.substr(pos, 4) == "<!--") {
            pos = text.find("-->", pos);
            if (pos == std::string_view::npos) return std::nullopt;
            continue;
        }
        if (text[pos + 1] == '?' || text[pos + 1] == '!') {
            pos = text.find('>', pos);
            if (pos == std::string_view::npos) return std::nullopt;
            continue;
        }
        break;
    }
    auto end = text.find('>', pos);
    if (end == std::string_view::npos) {
        return std::nullopt;
    }
    std::string tag(text.substr(pos + 1, end - pos - 1));
    auto name_end = tag.find_first_of(" \t\r\n/");
    std::string qualified = tag.substr(0, name_end);
    std::string prefix;
    std::string local = qualified;
    if (auto colon = qualified.find(':'); colon != std::string::npos) {
        prefix = qualified.substr(0, colon);
        local = qualified.substr(colon + 1);
    }
    const std::string attr = prefix.empty() ? "xmlns" : "xmlns:" + prefix;
    std::string ns;
    for (auto at = tag.find(attr); at != std::string::npos; at = tag.find(attr, at + 1)) {
        if (at == 0 || !std::isspace(static_cast<unsigned char>(tag[at - 1]))) continue;
        auto eq = tag.find_first_not_of(" \t\r\n", at + attr.size());
        if (eq == std::string::npos || tag[eq] != '=') continue;
        auto quote = tag.find_first_not_of(" \t\r\n", eq + 1);
        if (quote == std::string::npos || (tag[quote] != '"' && tag[quote] != '\'')) continue;
        auto close = tag.find(tag[quote], quote + 1);
        if (close == std::string::npos) continue;
        ns = tag.substr(quote + 1, close - quote - 1);
        break;
    }
    return std::make_pair(local, ns);
}

bool wadl_root(std::string_view text) {
    auto root = root_element(text);
    return root && root->first == "application" &&
           (root->second == "http://wadl.dev.java.net/2009/02" ||
            root->second == "http://research.sun.com/wadl/2006/10");
}

}  // namespace

FormatGuess detect_format(std::string_view document_text, std::string_view file_name) {
    const auto text = detail::strip_bom(document_text);
    std::vector<FormatGuess> matches;
    if (raml_header(text)) {
        matches.push_back({DetectedFormat::Raml, "first line starts with #%RAML"});
    }
    if (wadl_root(text)) {
        matches.push_back({DetectedFormat::Wadl, "root element is application in the WADL namespace"});
    }
    if (openapi_key(text)) {
        matches.push_back({DetectedFormat::OpenApi, "top-level openapi/swagger key"});
    }
    if (matches.empty()) {
        return {DetectedFormat::Unknown, "no detection rule matched"};
    }
    if (matches.size() > 1) {
        if (auto preferred = format_for_extension(extension_of(file_name))) {
            for (auto& match : matches) {
                if (match.format == *preferred) {
                    match.confidence_reason += " (file extension broke a tie)";
                    return match;
                }
            }
        }
    }
    return matches.front();
}

ApiDescription parse_document(DetectedFormat format, std::string_view document_text,
                              std::string_view source_file) {
    switch (format) {
        case DetectedFormat::OpenApi: return parse_openapi(document_text, source_file);
        case DetectedFormat::Raml: return parse_raml(document_text, source_file);
        case DetectedFormat::Wadl: return parse_wadl(document_text, source_file);
        case DetectedFormat::Unknown: break;
    }
    throw ParseError(ParseErrorKind::MalformedDocument, "unknown description format");
}

}  // namespace restmetrics
