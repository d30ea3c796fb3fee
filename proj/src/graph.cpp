// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dygraph/graph.hpp"

#include <algorithm>

namespace dygraph {

namespace {
void sorted_insert(std::vector<int>& list, int x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
}
void sorted_erase(std::vector<int>& list, int x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    list.erase(it);
}
}  // namespace

void DiGraph::insert_edge(int u, int v, std::optional<double> w) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error("self-loop " + std::to_string(u) + " rejected");
    if (weights_.count({u, v})) throw DuplicateEdge(u, v);
    double wt = 1.0;
    if (weighted_) {
        wt = w.value_or(1.0);
        if (!(wt >= 1.0 && wt <= cap_)) {
            throw WeightOutOfRange("weight " + std::to_string(wt) + " outside [1," +
                                   std::to_string(cap_) + "]");
        }
    } else if (w.has_value() && *w != 1.0) {
        throw WeightOutOfRange("unweighted graph only accepts weight 1");
    }
    weights_[{u, v}] = wt;
    sorted_insert(out_[u], v);
    sorted_insert(in_[v], u);
}

void DiGraph::delete_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (!weights_.count({u, v})) throw MissingEdge(u, v);
    weights_.erase({u, v});
    sorted_erase(out_[u], v);
    sorted_erase(in_[v], u);
}

void DiGraph::insert_incoming(int v,
                              const std::vector<std::pair<int, std::optional<double>>>& tails) {
    check_vertex(v);
    if (static_cast<int>(tails.size()) > n_) {
        throw Error("insert_incoming accepts at most n entries");
    }
    for (size_t i = 0; i < tails.size(); ++i) {
        for (size_t j = i + 1; j < tails.size(); ++j) {
            if (tails[i].first == tails[j].first) {
                throw DuplicateEdge(tails[i].first, v);
            }
        }
    }
    // All-or-nothing: validate before mutating.
    for (const auto& [u, w] : tails) {
        check_vertex(u);
        if (u == v) throw Error("self-loop " + std::to_string(u) + " rejected");
        if (weights_.count({u, v})) throw DuplicateEdge(u, v);
        if (weighted_) {
            double wt = w.value_or(1.0);
            if (!(wt >= 1.0 && wt <= cap_)) {
                throw WeightOutOfRange("weight " + std::to_string(wt) + " outside range");
            }
        } else if (w.has_value() && *w != 1.0) {
            throw WeightOutOfRange("unweighted graph only accepts weight 1");
        }
    }
    for (const auto& [u, w] : tails) insert_edge(u, v, w);
}

std::vector<std::pair<int, int>> DiGraph::edges() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(weights_.size());
    for (const auto& [e, w] : weights_) result.push_back(e);
    return result;
}

void apply_update(DiGraph& g, const UpdateEvent& e) {
    switch (e.kind) {
        case UpdateEvent::Kind::InsertEdge:
            g.insert_edge(e.u, e.v, e.w);
            break;
        case UpdateEvent::Kind::DeleteEdge:
            g.delete_edge(e.u, e.v);
            break;
        case UpdateEvent::Kind::InsertIncoming:
            g.insert_incoming(e.u, e.tails);
            break;
    }
}

}  // namespace dygraph
