// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "dygraph/errors.hpp"
#include "dygraph/graph.hpp"

namespace dygraph {

// Persistent catenable edge sequence. Concatenation shares structure and
// never mutates its operands; handles are O(1)-size and freely copyable.
// Internally a height-balanced immutable leaf tree (AVL join), so concat is
// O(log) and iteration is linear with an explicit stack.
class CatPath {
  public:
    CatPath() = default;  // invalid handle

    static CatPath empty_at(int vertex);
    static CatPath singleton(int tail, int head, double weight);
    static CatPath concat(const CatPath& a, const CatPath& b);

    bool valid() const { return anchor_ >= 0 || root_ != nullptr; }
    bool is_empty() const { return root_ == nullptr; }

    int tail() const;
    int head() const;
    double weight() const;
    int hops() const;
    int height() const;

    // Visits edges left to right.
    void for_each_edge(const std::function<void(int, int, double)>& fn) const;

    // Vertex sequence (for an empty path, just the anchor).
    std::vector<int> vertices() const;
    PathWitness to_witness() const;

  private:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    struct Node {
        NodePtr left, right;   // both null for a leaf
        int tail, head;
        double edge_weight;    // leaf only
        double total_weight;
        int hops;
        int height;
    };

    static NodePtr make_leaf(int u, int v, double w);
    static NodePtr make_node(const NodePtr& l, const NodePtr& r);
    static NodePtr join(const NodePtr& l, const NodePtr& r);
    static NodePtr join_right(const NodePtr& l, const NodePtr& r);
    static NodePtr join_left(const NodePtr& l, const NodePtr& r);
    static int node_height(const NodePtr& p) { return p ? p->height : -1; }

    explicit CatPath(NodePtr root) : root_(std::move(root)), anchor_(-1) {}

    NodePtr root_;
    int anchor_ = -1;  // endpoint for edgeless paths; -1 means invalid
};

}  // namespace dygraph
