// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "restmetrics/model.hpp"

namespace rmtest {

using restmetrics::ApiDescription;
using restmetrics::DataNode;
using restmetrics::HttpVerb;
using restmetrics::Operation;
using restmetrics::Parameter;
using restmetrics::ParameterLocation;
using restmetrics::Payload;
using restmetrics::Route;

DataNode prim(const std::string& name, const std::string& type = "string");
DataNode obj(const std::string& name, std::vector<DataNode> children);
DataNode arr(const std::string& name, DataNode item);

Parameter param(const std::string& name, ParameterLocation location = ParameterLocation::Query,
                const std::string& type = "string");
Parameter path_param(const std::string& name, const std::string& type = "string");

Payload request(std::optional<DataNode> root, const std::string& media_type = "application/json");
Payload response(const std::string& status, std::optional<DataNode> root,
                 const std::string& media_type = "application/json");

Operation op(HttpVerb verb, std::vector<Parameter> parameters = {}, std::vector<Payload> requests = {},
             std::vector<Payload> responses = {});

/// Segments are split from the path; the path is kept verbatim.
Route route(const std::string& path, std::vector<Operation> operations);

ApiDescription api(std::vector<Route> routes, const std::string& title = "fixture");

struct NamedFixture {
    std::string name;
    ApiDescription api;
};

/// Hand-built models, each with at most six operations.
std::vector<NamedFixture> hand_built_fixtures();

/// The four-operation example used throughout the metric tests:
/// /customers [GET, POST], /customers/{id} [GET], /orders [GET].
ApiDescription customers_orders_example();

struct RandomSpec {
    std::size_t max_routes{8};
    std::size_t max_depth{4};
    bool allow_root_route{true};
    bool allow_empty_api{true};
};

ApiDescription random_api(std::mt19937_64& rng, const RandomSpec& spec = {});

/// Reorders routes, operations, parameters, payloads and object properties.
ApiDescription shuffled(const ApiDescription& api, std::mt19937_64& rng);

/// Copy with every first path segment renamed, so no route collides with the original.
ApiDescription renamed_copy(const ApiDescription& api, const std::string& suffix);

/// Routes of both APIs side by side.
ApiDescription concatenated(const ApiDescription& a, const ApiDescription& b);

}  // namespace rmtest
