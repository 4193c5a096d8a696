// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

#include "fixtures.hpp"

#include <algorithm>
#include <sstream>

namespace rmtest {

using restmetrics::NodeKind;
using restmetrics::PayloadDirection;

DataNode prim(const std::string& name, const std::string& type) {
    return DataNode::primitive(name, type);
}

DataNode obj(const std::string& name, std::vector<DataNode> children) {
    return DataNode::object(name, std::move(children));
}

DataNode arr(const std::string& name, DataNode item) {
    return DataNode::array(name, std::move(item));
}

Parameter param(const std::string& name, ParameterLocation location, const std::string& type) {
    return Parameter{name, location, type, location == ParameterLocation::Path};
}

Parameter path_param(const std::string& name, const std::string& type) {
    return param(name, ParameterLocation::Path, type);
}

Payload request(std::optional<DataNode> root, const std::string& media_type) {
    return Payload{PayloadDirection::Request, std::nullopt, media_type, std::move(root)};
}

Payload response(const std::string& status, std::optional<DataNode> root, const std::string& media_type) {
    return Payload{PayloadDirection::Response, status, media_type, std::move(root)};
}

Operation op(HttpVerb verb, std::vector<Parameter> parameters, std::vector<Payload> requests,
             std::vector<Payload> responses) {
    Operation o;
    o.verb = verb;
    o.parameters = std::move(parameters);
    o.request_payloads = std::move(requests);
    o.response_payloads = std::move(responses);
    return o;
}

Route route(const std::string& path, std::vector<Operation> operations) {
    Route r;
    r.path = path;
    std::stringstream in(path);
    std::string segment;
    while (std::getline(in, segment, '/')) {
        if (!segment.empty()) r.segments.push_back(segment);
    }
    r.operations = std::move(operations);
    return r;
}

ApiDescription api(std::vector<Route> routes, const std::string& title) {
    ApiDescription a;
    a.title = title;
    a.version = "1";
    a.source_file = title + ".model";
    a.routes = std::move(routes);
    return a;
}

ApiDescription customers_orders_example() {
    auto customer = obj("", {prim("id", "integer"), prim("name")});
    return api(
        {
            route("/customers",
                  {
                      op(HttpVerb::Get, {param("limit", ParameterLocation::Query, "integer")}, {},
                         {response("200", arr("", customer))}),
                      op(HttpVerb::Post, {}, {request(obj("", {prim("name")}))},
                         {response("201", customer)}),
                  }),
            route("/customers/{id}",
                  {op(HttpVerb::Get, {path_param("id", "integer")}, {}, {response("200", customer)})}),
            route("/orders", {op(HttpVerb::Get, {}, {}, {response("200", arr("", prim("", "string")))})}),
        },
        "customers-orders");
}

std::vector<NamedFixture> hand_built_fixtures() {
    std::vector<NamedFixture> out;
    out.push_back({"customers_orders", customers_orders_example()});

    out.push_back({"single_operation",
                   api({route("/ping", {op(HttpVerb::Get, {}, {}, {response("200", prim("", "string"))})})})});

    out.push_back({"no_routes", api({})});

    out.push_back({"root_and_health",
                   api({
                       route("/", {op(HttpVerb::Get, {}, {}, {response("200", obj("", {prim("version")}))})}),
                       route("/health", {op(HttpVerb::Get, {}, {}, {response("200", obj("", {prim("status")}))}),
                                         op(HttpVerb::Head)}),
                   })});

    out.push_back({"bodiless_crud",
                   api({
                       route("/items", {op(HttpVerb::Get), op(HttpVerb::Post)}),
                       route("/items/{id}", {op(HttpVerb::Get, {path_param("id")}),
                                             op(HttpVerb::Delete, {path_param("id")})}),
                   })});

    {
        auto body = obj("", {prim("a"), prim("b", "integer")});
        auto reply = obj("", {prim("ok", "boolean")});
        out.push_back({"identical_messages",
                       api({route("/x", {op(HttpVerb::Put, {param("q")}, {request(body)}, {response("200", reply)}),
                                         op(HttpVerb::Post, {param("q")}, {request(body)},
                                            {response("200", reply)})})})});
    }

    out.push_back(
        {"disjoint_messages",
         api({route("/a", {op(HttpVerb::Get, {param("p", ParameterLocation::Query, "integer")}, {},
                              {response("200", obj("", {prim("x")}))})}),
              route("/b", {op(HttpVerb::Post, {}, {request(obj("", {prim("y", "boolean")}))},
                              {response("200", obj("", {prim("z", "number")}))})})})});

    {
        auto matrix = arr("", arr("", prim("", "number")));
        auto order = obj("", {prim("id", "integer"),
                              arr("lines", obj("", {prim("sku"), prim("qty", "integer"),
                                                    obj("price", {prim("amount", "number"), prim("currency")})})),
                              obj("customer", {prim("id", "integer"), obj("address", {prim("city"), prim("zip")})})});
        out.push_back({"nested_structures",
                       api({route("/orders", {op(HttpVerb::Post, {}, {request(order)}, {response("201", order)}),
                                              op(HttpVerb::Get, {}, {}, {response("200", arr("", order))})}),
                            route("/reports/matrix", {op(HttpVerb::Get, {param("from"), param("to")}, {},
                                                         {response("200", matrix)})})})});
    }

    {
        auto json_body = obj("", {prim("name"), prim("email"), prim("age", "integer")});
        auto form_body = obj("", {prim("name"), prim("email")});
        out.push_back(
            {"media_type_variants",
             api({route("/users",
                        {op(HttpVerb::Post, {param("X-Trace", ParameterLocation::Header)},
                            {request(json_body), request(form_body, "application/x-www-form-urlencoded")},
                            {response("201", json_body), response("201", json_body, "application/xml"),
                             response("400", obj("", {prim("message")})), response("500", std::nullopt, "")}),
                         op(HttpVerb::Get, {}, {}, {response("200", arr("", json_body))})})})});
    }

    {
        auto node = obj("", {prim("id", "integer"), arr("children", DataNode::cycle("")), DataNode::cycle("parent")});
        out.push_back(
            {"recursive_tree",
             api({route("/nodes/{id}", {op(HttpVerb::Get, {path_param("id", "integer")}, {}, {response("200", node)}),
                                        op(HttpVerb::Put, {path_param("id", "integer")}, {request(node)},
                                           {response("204", std::nullopt, "")})})})});
    }

    out.push_back(
        {"deep_paths",
         api({route("/a/b/c/d/e", {op(HttpVerb::Get, {}, {}, {response("200", prim("", "string"))})}),
              route("/a/b", {op(HttpVerb::Get, {}, {}, {response("200", prim("", "string"))})}),
              route("/z", {op(HttpVerb::Delete, {}, {}, {response("204", std::nullopt, "")})}),
              route("/a/{x}/c", {op(HttpVerb::Patch, {path_param("x")}, {request(obj("", {prim("v")}))},
                                    {response("200", prim("", "string"))})})})});

    out.push_back(
        {"header_and_options",
         api({route("/files/{name}",
                    {op(HttpVerb::Head, {path_param("name"), param("If-None-Match", ParameterLocation::Header)}),
                     op(HttpVerb::Options, {path_param("name")}),
                     op(HttpVerb::Get, {path_param("name"), param("Range", ParameterLocation::Header)}, {},
                        {response("200", prim("", "file"), "application/octet-stream"),
                         response("206", prim("", "file"), "application/octet-stream")}),
                     op(HttpVerb::Put, {path_param("name"), param("session", ParameterLocation::Cookie)},
                        {request(prim("", "file"), "application/octet-stream")}, {response("201", std::nullopt, "")})})})});

    {
        auto page = obj("", {prim("total", "integer"), arr("items", obj("", {prim("id", "integer")}))});
        auto error = obj("", {prim("code", "integer"), prim("message")});
        out.push_back(
            {"shared_responses",
             api({route("/a", {op(HttpVerb::Get, {param("page", ParameterLocation::Query, "integer")}, {},
                                  {response("200", page), response("404", error)})}),
                  route("/b", {op(HttpVerb::Get, {param("cursor")}, {}, {response("200", page), response("404", error)})}),
                  route("/c", {op(HttpVerb::Post, {}, {request(obj("", {prim("id", "integer")}))},
                                  {response("409", error)})})})});
    }

    {
        auto pet = obj("", {prim("id", "integer"), prim("name"), prim("tag")});
        auto pets = arr("", pet);
        out.push_back(
            {"six_operations",
             api({route("/pets", {op(HttpVerb::Get, {param("limit", ParameterLocation::Query, "integer")}, {},
                                     {response("200", pets)}),
                                  op(HttpVerb::Post, {}, {request(obj("", {prim("name"), prim("tag")}))},
                                     {response("201", pet)})}),
                  route("/pets/{petId}", {op(HttpVerb::Get, {path_param("petId", "integer")}, {}, {response("200", pet)}),
                                          op(HttpVerb::Put, {path_param("petId", "integer")}, {request(pet)},
                                             {response("200", pet)}),
                                          op(HttpVerb::Delete, {path_param("petId", "integer")}, {},
                                             {response("204", std::nullopt, "")})}),
                  route("/stores/{storeId}/pets",
                        {op(HttpVerb::Get, {path_param("storeId"), param("limit", ParameterLocation::Query, "integer")},
                            {}, {response("200", pets)})})})});
    }

    out.push_back(
        {"matrix_and_primitive_bodies",
         api({route("/search", {op(HttpVerb::Post, {param("lang", ParameterLocation::Matrix)},
                                   {request(prim("", "string"), "text/plain")},
                                   {response("200", arr("", prim("", "string")))}),
                                op(HttpVerb::Get, {param("q"), param("lang", ParameterLocation::Matrix)}, {},
                                   {response("200", arr("", prim("", "string")))})}),
              route("/count", {op(HttpVerb::Get, {param("q")}, {}, {response("200", prim("", "integer"), "text/plain")})})})});

    return out;
}

namespace {

const std::vector<std::string> kSegmentPool = {"users", "orders", "items", "{id}", "search", "v2", "admin", "{key}"};
const std::vector<std::string> kNamePool = {"id", "name", "email", "total", "tags", "meta", "price", "code"};
const std::vector<std::string> kTypePool = {"string", "integer", "number", "boolean", "file", "other"};

std::size_t pick(std::mt19937_64& rng, std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

bool coin(std::mt19937_64& rng, double p = 0.5) {
    return std::bernoulli_distribution(p)(rng);
}

DataNode random_node(std::mt19937_64& rng, const std::string& name, std::size_t depth) {
    const auto roll = pick(rng, 10);
    if (depth == 0 || roll < 4) {
        return prim(name, kTypePool[pick(rng, kTypePool.size())]);
    }
    if (roll == 4) {
        return DataNode::cycle(name);
    }
    if (roll < 7) {
        return arr(name, random_node(rng, "", depth - 1));
    }
    std::vector<std::string> names = kNamePool;
    std::shuffle(names.begin(), names.end(), rng);
    const auto count = pick(rng, 5);
    std::vector<DataNode> children;
    for (std::size_t i = 0; i < count; ++i) children.push_back(random_node(rng, names[i], depth - 1));
    return obj(name, std::move(children));
}

std::optional<DataNode> random_root(std::mt19937_64& rng, std::size_t depth) {
    if (coin(rng, 0.2)) return std::nullopt;
    return random_node(rng, "", depth);
}

Operation random_operation(std::mt19937_64& rng, HttpVerb verb, const Route& r, const RandomSpec& spec) {
    Operation o;
    o.verb = verb;
    for (const auto& s : r.segments) {
        if (s.front() == '{') o.parameters.push_back(path_param(s.substr(1, s.size() - 2)));
    }
    const auto extra = pick(rng, 4);
    for (std::size_t i = 0; i < extra; ++i) {
        const auto location = coin(rng) ? ParameterLocation::Query : ParameterLocation::Header;
        o.parameters.push_back(param("p" + std::to_string(i), location, kTypePool[pick(rng, 4)]));
    }
    const auto requests = verb == HttpVerb::Get ? 0 : pick(rng, 3);
    for (std::size_t i = 0; i < requests; ++i) {
        o.request_payloads.push_back(request(random_root(rng, spec.max_depth), i == 0 ? "application/json" : "application/xml"));
    }
    const auto responses = pick(rng, 4);
    for (std::size_t i = 0; i < responses; ++i) {
        o.response_payloads.push_back(response(std::to_string(200 + i), random_root(rng, spec.max_depth)));
    }
    return o;
}

template <typename T>
void shuffle_vector(std::vector<T>& v, std::mt19937_64& rng) {
    std::shuffle(v.begin(), v.end(), rng);
}

void shuffle_node(DataNode& node, std::mt19937_64& rng) {
    if (node.kind == NodeKind::Object) shuffle_vector(node.children, rng);
    for (auto& c : node.children) shuffle_node(c, rng);
}

}  // namespace

ApiDescription random_api(std::mt19937_64& rng, const RandomSpec& spec) {
    ApiDescription a = api({}, "random");
    if (spec.allow_empty_api && coin(rng, 0.03)) return a;
    const auto route_count = 1 + pick(rng, spec.max_routes);
    std::vector<std::string> used;
    for (std::size_t i = 0; i < route_count; ++i) {
        std::string path;
        const auto depth = spec.allow_root_route ? pick(rng, 5) : 1 + pick(rng, 4);
        for (std::size_t d = 0; d < depth; ++d) {
            auto s = kSegmentPool[pick(rng, kSegmentPool.size())];
            if (d == 0 && s.front() == '{') s = "root";
            if (s.front() == '{') s.insert(s.size() - 1, std::to_string(d));
            path += "/" + s;
        }
        if (path.empty()) path = "/";
        if (std::find(used.begin(), used.end(), path) != used.end()) continue;
        used.push_back(path);
        Route r = route(path, {});
        std::vector<HttpVerb> verbs = {HttpVerb::Get, HttpVerb::Post, HttpVerb::Put, HttpVerb::Delete,
                                       HttpVerb::Patch, HttpVerb::Head, HttpVerb::Options};
        shuffle_vector(verbs, rng);
        const auto ops = 1 + pick(rng, 3);
        for (std::size_t k = 0; k < ops; ++k) r.operations.push_back(random_operation(rng, verbs[k], r, spec));
        a.routes.push_back(std::move(r));
    }
    return a;
}

ApiDescription shuffled(const ApiDescription& original, std::mt19937_64& rng) {
    ApiDescription a = original;
    shuffle_vector(a.routes, rng);
    for (auto& r : a.routes) {
        shuffle_vector(r.operations, rng);
        for (auto& o : r.operations) {
            shuffle_vector(o.parameters, rng);
            shuffle_vector(o.request_payloads, rng);
            shuffle_vector(o.response_payloads, rng);
            for (auto* payloads : {&o.request_payloads, &o.response_payloads}) {
                for (auto& p : *payloads) {
                    if (p.root) shuffle_node(*p.root, rng);
                }
            }
        }
    }
    return a;
}

ApiDescription renamed_copy(const ApiDescription& original, const std::string& suffix) {
    ApiDescription a = original;
    for (auto& r : a.routes) {
        if (r.segments.empty()) continue;
        r.segments.front() += suffix;
        std::string path;
        for (const auto& s : r.segments) path += "/" + s;
        r.path = path;
    }
    return a;
}

ApiDescription concatenated(const ApiDescription& a, const ApiDescription& b) {
    ApiDescription out = a;
    out.routes.insert(out.routes.end(), b.routes.begin(), b.routes.end());
    return out;
}

}  // namespace rmtest
