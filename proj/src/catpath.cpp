// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dygraph/catpath.hpp"

#include <algorithm>

namespace dygraph {

CatPath::NodePtr CatPath::make_leaf(int u, int v, double w) {
    return std::make_shared<Node>(Node{nullptr, nullptr, u, v, w, w, 1, 0});
}

CatPath::NodePtr CatPath::make_node(const NodePtr& l, const NodePtr& r) {
    return std::make_shared<Node>(Node{l, r, l->tail, r->head, 0.0,
                                       l->total_weight + r->total_weight, l->hops + r->hops,
                                       1 + std::max(l->height, r->height)});
}

// Join of two balanced trees, preserving AVL balance (|h(l)-h(r)| <= 1 at
// every node). Classic join-based construction over the right spine.
CatPath::NodePtr CatPath::join_right(const NodePtr& l, const NodePtr& r) {
    // Precondition: h(l) > h(r) + 1, so l is internal.
    const NodePtr& a = l->left;
    const NodePtr& c = l->right;
    if (node_height(c) <= node_height(r) + 1) {
        NodePtr t = make_node(c, r);
        if (t->height <= node_height(a) + 1) return make_node(a, t);
        // h(t) = h(a) + 2 with c taller than both a and r: double rotation.
        return make_node(make_node(a, c->left), make_node(c->right, r));
    }
    NodePtr t = join_right(c, r);
    if (t->height <= node_height(a) + 1) return make_node(a, t);
    return make_node(make_node(a, t->left), t->right);  // rotate left
}

CatPath::NodePtr CatPath::join_left(const NodePtr& l, const NodePtr& r) {
    // Mirror image: h(r) > h(l) + 1.
    const NodePtr& c = r->left;
    const NodePtr& a = r->right;
    if (node_height(c) <= node_height(l) + 1) {
        NodePtr t = make_node(l, c);
        if (t->height <= node_height(a) + 1) return make_node(t, a);
        return make_node(make_node(l, c->left), make_node(c->right, a));
    }
    NodePtr t = join_left(l, c);
    if (t->height <= node_height(a) + 1) return make_node(t, a);
    return make_node(t->left, make_node(t->right, a));  // rotate right
}

CatPath::NodePtr CatPath::join(const NodePtr& l, const NodePtr& r) {
    if (node_height(l) > node_height(r) + 1) return join_right(l, r);
    if (node_height(r) > node_height(l) + 1) return join_left(l, r);
    return make_node(l, r);
}

CatPath CatPath::empty_at(int vertex) {
    CatPath p;
    p.anchor_ = vertex;
    return p;
}

CatPath CatPath::singleton(int tail, int head, double weight) {
    return CatPath(make_leaf(tail, head, weight));
}

CatPath CatPath::concat(const CatPath& a, const CatPath& b) {
    if (!a.valid() || !b.valid()) throw EndpointMismatch("concat of an invalid path");
    if (a.head() != b.tail()) {
        throw EndpointMismatch("concat endpoints disagree: " + std::to_string(a.head()) +
                               " vs " + std::to_string(b.tail()));
    }
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    return CatPath(join(a.root_, b.root_));
}

int CatPath::tail() const { return root_ ? root_->tail : anchor_; }
int CatPath::head() const { return root_ ? root_->head : anchor_; }
double CatPath::weight() const { return root_ ? root_->total_weight : 0.0; }
int CatPath::hops() const { return root_ ? root_->hops : 0; }
int CatPath::height() const { return root_ ? root_->height : 0; }

void CatPath::for_each_edge(const std::function<void(int, int, double)>& fn) const {
    if (!root_) return;
    std::vector<const Node*> stack{root_.get()};
    while (!stack.empty()) {
        const Node* cur = stack.back();
        stack.pop_back();
        if (!cur->left) {
            fn(cur->tail, cur->head, cur->edge_weight);
        } else {
            stack.push_back(cur->right.get());  // left processed first
            stack.push_back(cur->left.get());
        }
    }
}

std::vector<int> CatPath::vertices() const {
    std::vector<int> out{tail()};
    for_each_edge([&out](int, int head, double) { out.push_back(head); });
    return out;
}

PathWitness CatPath::to_witness() const { return {vertices(), weight()}; }

}  // namespace dygraph
