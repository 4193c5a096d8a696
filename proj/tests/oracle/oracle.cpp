// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

#include "oracle.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace oracle {

using restmetrics::ApiDescription;
using restmetrics::DataNode;
using restmetrics::NodeKind;
using restmetrics::Operation;
using restmetrics::Payload;

namespace {

bool same_node(const DataNode& a, const DataNode& b);

// Tries every assignment of b's children to a's children.
bool match_children(const std::vector<DataNode>& a, const std::vector<DataNode>& b, std::size_t i,
                    std::vector<bool>& used) {
    if (i == a.size()) return true;
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (used[j] || a[i].name != b[j].name || !same_node(a[i], b[j])) continue;
        used[j] = true;
        if (match_children(a, b, i + 1, used)) return true;
        used[j] = false;
    }
    return false;
}

bool same_node(const DataNode& a, const DataNode& b) {
    if (a.kind != b.kind || a.primitive_type != b.primitive_type || a.children.size() != b.children.size()) {
        return false;
    }
    if (a.kind == NodeKind::Array) {
        return same_node(a.children[0], b.children[0]);
    }
    std::vector<bool> used(b.children.size(), false);
    return match_children(a.children, b.children, 0, used);
}

std::vector<std::string> split_path(const std::string& path) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : path) {
        if (c == '/') {
            if (!current.empty()) parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) parts.push_back(current);
    return parts;
}

std::size_t count_leaves(const DataNode& n) {
    if (n.kind == NodeKind::Primitive || n.kind == NodeKind::ReferenceCycle) return 1;
    std::size_t total = 0;
    for (const auto& c : n.children) total += count_leaves(c);
    return total;
}

std::size_t count_nodes(const DataNode& n) {
    std::size_t total = 1;
    for (const auto& c : n.children) total += count_nodes(c);
    return total;
}

// A token is (kind, path components, type); kind 0 = parameter, 1 = body leaf.
using Token = std::tuple<int, std::vector<std::string>, std::string>;

void collect_leaves(const DataNode& n, std::vector<std::string>& path, std::vector<Token>& out) {
    if (n.kind == NodeKind::Primitive) {
        out.emplace_back(1, path, n.primitive_type.value_or("other"));
        return;
    }
    if (n.kind == NodeKind::ReferenceCycle) {
        out.emplace_back(1, path, "cycle");
        return;
    }
    for (const auto& c : n.children) {
        path.push_back(n.kind == NodeKind::Array ? std::string("[]") : "." + c.name);
        collect_leaves(c, path, out);
        path.pop_back();
    }
}

void add_unique(std::vector<Token>& set, const Token& t) {
    if (std::find(set.begin(), set.end(), t) == set.end()) set.push_back(t);
}

std::vector<Token> inputs(const Operation& o) {
    std::vector<Token> out;
    for (const auto& p : o.parameters) add_unique(out, Token{0, {p.name}, p.primitive_type});
    for (const auto& pl : o.request_payloads) {
        if (!pl.root) continue;
        std::vector<Token> leaves;
        std::vector<std::string> path;
        collect_leaves(*pl.root, path, leaves);
        for (const auto& t : leaves) add_unique(out, t);
    }
    return out;
}

std::vector<Token> outputs(const Operation& o) {
    std::vector<Token> out;
    for (const auto& pl : o.response_payloads) {
        if (!pl.root) continue;
        std::vector<Token> leaves;
        std::vector<std::string> path;
        collect_leaves(*pl.root, path, leaves);
        for (const auto& t : leaves) add_unique(out, t);
    }
    return out;
}

double jaccard(const std::vector<Token>& a, const std::vector<Token>& b) {
    if (a.empty() && b.empty()) return 1.0;
    double both = 0;
    for (const auto& t : a) {
        if (std::find(b.begin(), b.end(), t) != b.end()) both += 1;
    }
    return both / (static_cast<double>(a.size() + b.size()) - both);
}

bool share_input_type(const Operation& a, const Operation& b) {
    for (const auto& p : a.parameters) {
        for (const auto& q : b.parameters) {
            if (p.primitive_type == q.primitive_type) return true;
        }
    }
    for (const auto& p : a.request_payloads) {
        for (const auto& q : b.request_payloads) {
            if (p.root && q.root && same_node(*p.root, *q.root)) return true;
        }
    }
    return false;
}

bool share_output_type(const Operation& a, const Operation& b) {
    for (const auto& p : a.response_payloads) {
        for (const auto& q : b.response_payloads) {
            if (p.root && q.root && same_node(*p.root, *q.root)) return true;
        }
    }
    return false;
}

}  // namespace

bool same_structure(const std::optional<DataNode>& a, const std::optional<DataNode>& b) {
    if (!a || !b) return !a && !b;
    return same_node(*a, *b);
}

std::map<std::string, std::optional<double>> measure(const ApiDescription& api) {
    std::map<std::string, std::optional<double>> m;
    std::vector<const Operation*> ops;
    for (const auto& r : api.routes) {
        for (const auto& o : r.operations) ops.push_back(&o);
    }
    const double n = static_cast<double>(ops.size());
    const double routes = static_cast<double>(api.routes.size());

    m["WSIC"] = n;

    if (api.routes.empty()) {
        m["APL"] = m["LP"] = m["NOR"] = m["BRC"] = std::nullopt;
    } else {
        double total = 0;
        double longest = 0;
        std::vector<std::string> roots;
        for (const auto& r : api.routes) {
            const auto parts = split_path(r.path);
            total += static_cast<double>(parts.size());
            longest = std::max(longest, static_cast<double>(parts.size()));
            roots.push_back(parts.empty() ? "/" : parts[0]);
        }
        m["APL"] = total / routes;
        m["LP"] = longest;
        double distinct = 0;
        double biggest = 0;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            bool seen_before = false;
            double same = 0;
            for (std::size_t j = 0; j < roots.size(); ++j) {
                if (roots[j] == roots[i]) {
                    same += 1;
                    if (j < i) seen_before = true;
                }
            }
            if (!seen_before) distinct += 1;
            biggest = std::max(biggest, same);
        }
        m["NOR"] = distinct;
        m["BRC"] = biggest / routes;
    }

    if (ops.empty()) {
        m["APO"] = m["DW"] = m["SIDC"] = std::nullopt;
    } else {
        double args = 0;
        double weight = 0;
        for (const auto* o : ops) {
            std::size_t widest = 0;
            for (const auto& p : o->request_payloads) {
                if (p.root) widest = std::max(widest, count_leaves(*p.root));
            }
            args += static_cast<double>(o->parameters.size() + widest);
            weight += static_cast<double>(o->parameters.size());
            for (const auto* list : {&o->request_payloads, &o->response_payloads}) {
                for (const auto& p : *list) {
                    if (p.root) weight += static_cast<double>(count_nodes(*p.root));
                }
            }
        }
        m["APO"] = args / n;
        m["DW"] = weight;

        if (ops.size() == 1) {
            m["SIDC"] = 1.0;
        } else {
            double p_in = 0;
            double p_out = 0;
            for (std::size_t i = 0; i < ops.size(); ++i) {
                for (std::size_t j = i + 1; j < ops.size(); ++j) {
                    if (share_input_type(*ops[i], *ops[j])) p_in += 1;
                    if (share_output_type(*ops[i], *ops[j])) p_out += 1;
                }
            }
            m["SIDC"] = (p_in + p_out) / (2.0 * (n * (n - 1) / 2.0));
        }
    }

    std::vector<const Payload*> messages;
    for (const auto* o : ops) {
        for (const auto& p : o->request_payloads) messages.push_back(&p);
        for (const auto& p : o->response_payloads) messages.push_back(&p);
    }
    if (messages.empty()) {
        m["DMR"] = std::nullopt;
    } else {
        double classes = 0;
        for (std::size_t i = 0; i < messages.size(); ++i) {
            bool repeat = false;
            for (std::size_t j = 0; j < i && !repeat; ++j) {
                repeat = same_structure(messages[i]->root, messages[j]->root);
            }
            if (!repeat) classes += 1;
        }
        m["DMR"] = classes / static_cast<double>(messages.size());
    }

    if (ops.size() < 2) {
        m["LOC_MSG"] = std::nullopt;
    } else {
        double similarity = 0;
        double pairs = 0;
        for (std::size_t i = 0; i < ops.size(); ++i) {
            for (std::size_t j = i + 1; j < ops.size(); ++j) {
                similarity += (jaccard(inputs(*ops[i]), inputs(*ops[j])) + jaccard(outputs(*ops[i]), outputs(*ops[j]))) / 2;
                pairs += 1;
            }
        }
        m["LOC_MSG"] = 1.0 - similarity / pairs;
    }
    return m;
}

}  // namespace oracle
