// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "dygraph/errors.hpp"

namespace dygraph {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Directed graph on a fixed vertex set {0,...,n-1}. Out- and in-edge lists
// are kept sorted by neighbor id so every traversal order is reproducible.
// No parallel edges, no self-loops. Weighted graphs carry weights in [1, C].
class DiGraph {
  public:
    explicit DiGraph(int n, bool weighted = false, double weight_cap = kInf)
        : n_(n), weighted_(weighted), cap_(weight_cap), out_(n), in_(n) {}

    int n() const { return n_; }
    bool weighted() const { return weighted_; }
    double weight_cap() const { return cap_; }
    int edge_count() const { return static_cast<int>(weights_.size()); }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return weights_.count({u, v}) != 0;
    }

    // Weight of a present edge; 1 for every edge of an unweighted graph.
    double weight(int u, int v) const {
        auto it = weights_.find({u, v});
        if (it == weights_.end()) throw MissingEdge(u, v);
        return it->second;
    }

    void insert_edge(int u, int v, std::optional<double> w = std::nullopt);
    void delete_edge(int u, int v);
    void insert_incoming(int v, const std::vector<std::pair<int, std::optional<double>>>& tails);

    const std::vector<int>& out_edges(int u) const { check_vertex(u); return out_[u]; }
    const std::vector<int>& in_edges(int v) const { check_vertex(v); return in_[v]; }

    // All edges in lexicographic (tail, head) order.
    std::vector<std::pair<int, int>> edges() const;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw BadVertex(v, n_);
    }

    bool operator==(const DiGraph& other) const {
        return n_ == other.n_ && weights_ == other.weights_;
    }

  private:
    int n_;
    bool weighted_;
    double cap_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    std::map<std::pair<int, int>, double> weights_;
};

// A single mutation of the edge set.
struct UpdateEvent {
    enum class Kind { InsertEdge, DeleteEdge, InsertIncoming };
    Kind kind;
    int u = -1;  // tail for single-edge events, head for InsertIncoming
    int v = -1;
    std::optional<double> w;
    std::vector<std::pair<int, std::optional<double>>> tails;  // InsertIncoming only

    static UpdateEvent insert(int u, int v, std::optional<double> w = std::nullopt) {
        return {Kind::InsertEdge, u, v, w, {}};
    }
    static UpdateEvent remove(int u, int v) {
        return {Kind::DeleteEdge, u, v, std::nullopt, {}};
    }
    static UpdateEvent insert_incoming(
        int v, std::vector<std::pair<int, std::optional<double>>> tails) {
        return {Kind::InsertIncoming, v, -1, std::nullopt, std::move(tails)};
    }
};

void apply_update(DiGraph& g, const UpdateEvent& e);

// A reported path: the vertex sequence v0...vk plus its total weight
// (hop count when the graph is unweighted). An empty path is a single vertex.
struct PathWitness {
    std::vector<int> vertices;
    double total_weight = 0.0;

    static PathWitness empty_at(int v) { return {{v}, 0.0}; }
    int hops() const { return static_cast<int>(vertices.size()) - 1; }
    int source() const { return vertices.front(); }
    int target() const { return vertices.back(); }
};

}  // namespace dygraph
