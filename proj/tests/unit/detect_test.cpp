// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "restmetrics/parsers.hpp"

using namespace restmetrics;

TEST(Detect, OpenApiKeyword) {
    EXPECT_EQ(detect_format("openapi: 3.0.1\ninfo: {}\n", "x.yaml").format, DetectedFormat::OpenApi);
    EXPECT_EQ(detect_format("# comment\nswagger: '2.0'\n", "x").format, DetectedFormat::OpenApi);
    EXPECT_EQ(detect_format("{\n  \"openapi\": \"3.1.0\"\n}", "x.json").format, DetectedFormat::OpenApi);
    EXPECT_EQ(detect_format("{\"info\": {}, \"swagger\" : \"2.0\"", "broken.json").format, DetectedFormat::OpenApi);
}

TEST(Detect, RamlHeader) {
    EXPECT_EQ(detect_format("#%RAML 1.0\ntitle: x\n", "x.yaml").format, DetectedFormat::Raml);
    EXPECT_EQ(detect_format("\xEF\xBB\xBF#%RAML 1.0\ntitle: x\n", "x").format, DetectedFormat::Raml);
}

TEST(Detect, WadlNamespace) {
    EXPECT_EQ(detect_format("<?xml version=\"1.0\"?><application xmlns=\"http://wadl.dev.java.net/2009/02\">",
                            "x.xml")
                  .format,
              DetectedFormat::Wadl);
    EXPECT_EQ(detect_format("<!-- c --><wadl:application xmlns:wadl=\"http://wadl.dev.java.net/2009/02\"/>", "x")
                  .format,
              DetectedFormat::Wadl);
    EXPECT_EQ(detect_format("<application xmlns=\"urn:other\"/>", "x.wadl").format, DetectedFormat::Unknown);
}

TEST(Detect, UnknownAndReason) {
    const auto guess = detect_format("title: nothing\n", "a.yaml");
    EXPECT_EQ(guess.format, DetectedFormat::Unknown);
    EXPECT_FALSE(guess.confidence_reason.empty());
    EXPECT_EQ(detect_format("", "a.yaml").format, DetectedFormat::Unknown);
    EXPECT_EQ(to_string(DetectedFormat::Raml), "RAML");
}

TEST(Detect, NestedKeyIsNotTopLevel) {
    EXPECT_EQ(detect_format("info:\n  openapi: 3.0.0\n", "a.yaml").format, DetectedFormat::Unknown);
}

TEST(Detect, ExtensionBreaksTies) {
    // A RAML header followed by an openapi key matches both rules.
    const std::string both = "#%RAML 1.0\nopenapi: 3.0.0\n";
    EXPECT_EQ(detect_format(both, "a.raml").format, DetectedFormat::Raml);
    EXPECT_EQ(detect_format(both, "a.yaml").format, DetectedFormat::OpenApi);
    EXPECT_EQ(detect_format("openapi: 3.0.0\n", "a.raml").format, DetectedFormat::OpenApi);
}

TEST(Detect, ParseDocumentDispatches) {
    const auto a = parse_document(DetectedFormat::Raml, "#%RAML 1.0\ntitle: t\n/a:\n  get:\n", "a.raml");
    EXPECT_EQ(a.source_format, SourceFormat::Raml);
    EXPECT_THROW((void)parse_document(DetectedFormat::Unknown, "x", "x"), ParseError);
}
