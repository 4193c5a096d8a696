// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "../support/fixtures.hpp"
#include "restmetrics/parsers.hpp"

using namespace restmetrics;
using namespace rmtest;

namespace {

ParseErrorKind error_kind(const std::string& text) {
    try {
        (void)parse_raml(text, "doc.raml");
    } catch (const ParseError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected a parse error";
    return ParseErrorKind::MalformedDocument;
}

}  // namespace

TEST(Raml, NestedResourcesFlatten) {
    const auto a = parse_raml(R"(#%RAML 1.0
title: Shop
version: v3
/customers:
  get:
  /{id}:
    get:
)",
                              "shop.raml");
    EXPECT_EQ(a.title, "Shop");
    EXPECT_EQ(a.version, "v3");
    EXPECT_EQ(a.source_format, SourceFormat::Raml);
    ASSERT_EQ(a.routes.size(), 2U);
    EXPECT_EQ(a.routes[0].path, "/customers");
    EXPECT_EQ(a.routes[1].path, "/customers/{id}");
    const auto& get_one = a.routes[1].operations.at(0);
    ASSERT_EQ(get_one.parameters.size(), 1U);
    EXPECT_EQ(get_one.parameters[0], (Parameter{"id", ParameterLocation::Path, "string", true}));
}

TEST(Raml, TwoMethodsOneRoute) {
    const auto a = parse_raml("#%RAML 1.0\ntitle: t\n/r:\n  get:\n  post:\n", "r.raml");
    ASSERT_EQ(a.routes.size(), 1U);
    EXPECT_EQ(a.routes[0].operations.size(), 2U);
}

TEST(Raml, DeclaredTypeInBody) {
    const auto a = parse_raml(R"(#%RAML 1.0
title: t
types:
  Customer:
    type: object
    properties:
      id: integer
      name: string
      active?: boolean
/customers:
  post:
    body:
      application/json:
        type: Customer
)",
                              "c.raml");
    const auto& o = a.routes.at(0).operations.at(0);
    ASSERT_EQ(o.request_payloads.size(), 1U);
    EXPECT_EQ(o.request_payloads[0].media_type, "application/json");
    EXPECT_EQ(leaf_count(*o.request_payloads[0].root), 3U);
    EXPECT_EQ(*o.request_payloads[0].root,
              obj("", {prim("id", "integer"), prim("name", "string"), prim("active", "boolean")}));
}

TEST(Raml, ParametersAndResponses) {
    const auto a = parse_raml(R"(#%RAML 1.0
title: t
baseUri: https://api.example.com/{version}/shop
version: v1
mediaType: [application/json, application/xml]
/orders/{orderId}:
  uriParameters:
    orderId:
      type: integer
  get:
    queryParameters:
      expand?: boolean
      fields:
        type: string
        required: false
    headers:
      X-Trace: string
    responses:
      200:
        body:
          properties:
            id: integer
      404:
)",
                              "o.raml");
    EXPECT_EQ(a.base_path, "/v1/shop");
    ASSERT_EQ(a.routes.size(), 1U);
    const auto& o = a.routes[0].operations.at(0);
    ASSERT_EQ(o.parameters.size(), 4U);
    EXPECT_EQ(o.parameters[0], (Parameter{"orderId", ParameterLocation::Path, "integer", true}));
    EXPECT_EQ(o.parameters[1], (Parameter{"expand", ParameterLocation::Query, "boolean", false}));
    EXPECT_EQ(o.parameters[2], (Parameter{"fields", ParameterLocation::Query, "string", false}));
    EXPECT_EQ(o.parameters[3], (Parameter{"X-Trace", ParameterLocation::Header, "string", true}));
    ASSERT_EQ(o.response_payloads.size(), 3U);
    EXPECT_EQ(o.response_payloads[0].status_code, "200");
    EXPECT_EQ(o.response_payloads[0].media_type, "application/json");
    EXPECT_EQ(o.response_payloads[1].media_type, "application/xml");
    EXPECT_EQ(*o.response_payloads[1].root, obj("", {prim("id", "integer")}));
    EXPECT_EQ(o.response_payloads[2].status_code, "404");
    EXPECT_FALSE(o.response_payloads[2].root.has_value());
}

TEST(Raml, TypeExpressionsInheritanceAndCycles) {
    const auto a = parse_raml(R"(#%RAML 1.0
title: t
types:
  Base:
    properties:
      id: integer
  Item:
    type: Base
    properties:
      tags: string[]
      children: Item[]
  Id: integer
/items:
  get:
    responses:
      200:
        body:
          application/json: Item[]
  post:
    body:
      application/json:
        type: Id | string
)",
                              "t.raml");
    const auto& get = a.routes.at(0).operations.at(0);
    const auto item = obj("", {prim("id", "integer"), arr("tags", prim("", "string")), arr("children", DataNode::cycle(""))});
    EXPECT_EQ(*get.response_payloads.at(0).root, arr("", item));
    const auto& post = a.routes.at(0).operations.at(1);
    EXPECT_EQ(*post.request_payloads.at(0).root, prim("", "integer"));
}

TEST(Raml, TraitsAndResourceTypes) {
    const auto a = parse_raml(R"(#%RAML 1.0
title: t
mediaType: application/json
traits:
  paged:
    queryParameters:
      page: integer
      size:
        type: integer
        default: <<defaultSize>>
resourceTypes:
  collection:
    get:
      is: [paged: {defaultSize: 20}]
      responses:
        200:
          body:
            type: <<item>>[]
    post?:
      body:
        type: <<item>>
types:
  Book:
    properties:
      isbn: string
/books:
  type: {collection: {item: Book}}
  post:
/authors:
  type: {collection: {item: Book}}
)",
                              "rt.raml");
    ASSERT_EQ(a.routes.size(), 2U);
    const auto& authors = a.routes[0];
    EXPECT_EQ(authors.path, "/authors");
    ASSERT_EQ(authors.operations.size(), 1U);
    EXPECT_EQ(authors.operations[0].parameters.size(), 2U);
    const auto& books = a.routes[1];
    ASSERT_EQ(books.operations.size(), 2U);
    EXPECT_EQ(*books.operations[0].response_payloads.at(0).root, arr("", obj("", {prim("isbn")})));
    EXPECT_EQ(*books.operations[1].request_payloads.at(0).root, obj("", {prim("isbn")}));
}

TEST(Raml, ReservedTemplateParameters) {
    const auto a = parse_raml(R"(#%RAML 1.0
title: t
types:
  user:
    properties:
      name: string
resourceTypes:
  member:
    get:
      responses:
        200:
          body:
            application/json:
              type: <<resourcePathName | !singularize>>
/users:
  type: member
)",
                              "rp.raml");
    EXPECT_EQ(*a.routes.at(0).operations.at(0).response_payloads.at(0).root, obj("", {prim("name")}));
}

TEST(Raml, InlineJsonSchema) {
    const auto a = parse_raml(R"(#%RAML 1.0
title: t
/x:
  get:
    responses:
      200:
        body:
          application/json:
            type: |
              {"type": "object", "properties": {"a": {"type": "integer"}}}
)",
                              "js.raml");
    EXPECT_EQ(*a.routes.at(0).operations.at(0).response_payloads.at(0).root, obj("", {prim("a", "integer")}));
}

TEST(Raml, Errors) {
    EXPECT_EQ(error_kind("#%RAML 0.8\ntitle: old\n"), ParseErrorKind::UnsupportedVersion);
    EXPECT_EQ(error_kind("#%RAML 1.0 Library\ntypes: {}\n"), ParseErrorKind::UnsupportedVersion);
    EXPECT_EQ(error_kind("title: no header\n"), ParseErrorKind::MalformedDocument);
    EXPECT_EQ(error_kind("#%RAML 1.0\ntitle: [broken\n"), ParseErrorKind::MalformedDocument);
    EXPECT_EQ(error_kind("#%RAML 1.0\ntitle: t\ntypes:\n  A: !include a.raml\n/a:\n  get:\n    body:\n      application/json: A\n"),
              ParseErrorKind::UnresolvableReference);
    EXPECT_EQ(error_kind("#%RAML 1.0\ntitle: t\nuses:\n  lib: lib.raml\n/a:\n  get:\n    body:\n      application/json: lib.Thing\n"),
              ParseErrorKind::UnresolvableReference);
    EXPECT_EQ(error_kind("#%RAML 1.0\ntitle: t\n/a:\n  type: missing\n  get:\n"), ParseErrorKind::UnresolvableReference);
    EXPECT_EQ(error_kind("#%RAML 1.0\ntitle: t\n/a:\n  get:\n    is: [nope]\n"), ParseErrorKind::UnresolvableReference);
}
