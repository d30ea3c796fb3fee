// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "dygraph/graph.hpp"

namespace dygraph {

// Decremental strongly connected components over a deletions-only graph,
// extended with:
//   - topological labels: each component owns the interval
//     [label, label+size) and the intervals partition [0, n); an edge X->Y
//     in the condensation implies label(X) < label(Y); when a component
//     splits, the child intervals partition the parent interval (nesting);
//   - a simple condensation with one representative original edge per pair,
//     the lexicographically smallest (tail, head) among surviving edges.
//
// Deletions recompute the components of the affected SCC only. The largest
// child keeps the parent's component id (ties broken by smaller minimum
// member); labels are reassigned to all children in topological order,
// packed into the parent's interval.
class DecSccState {
  public:
    explicit DecSccState(const DiGraph& g);

    struct Split {
        int parent;                  // id retained by the largest child
        std::vector<int> children;   // all child ids in topological order
    };

    // Removes the edge; returns the splits it caused (empty or one entry).
    std::vector<Split> delete_edge(int u, int v);

    int n() const { return graph_.n(); }
    const DiGraph& graph() const { return graph_; }
    uint64_t version() const { return version_; }

    int component_of(int v) const { return scc_of_[v]; }
    const std::vector<int>& members(int comp) const;
    int size_of(int comp) const { return int(members(comp).size()); }
    int label_of(int comp) const;
    std::vector<int> component_ids() const;

    // Canonical partition: every vertex labeled by its component's minimum id.
    std::vector<int> canonical_partition() const;

    bool has_cond_edge(int x, int y) const { return cond_.count({x, y}) != 0; }
    std::pair<int, int> representative_edge(int x, int y) const;
    std::vector<int> cond_out(int x) const;
    std::vector<int> cond_in(int y) const;

    // Simple u->v path inside their common component (BFS, ascending ids).
    PathWitness path_in_scc(int u, int v) const;

    // Strongly connected subgraph of the component: BFS out-tree from the
    // minimum member union BFS in-tree to it; at most 2(|S|-1) edges.
    std::vector<std::pair<int, int>> scc_subgraph(int comp) const;

    // Throws InternalInconsistency when any maintained invariant is broken.
    void check_invariants() const;

  private:
    void build_initial();
    std::vector<std::vector<int>> local_sccs(const std::vector<int>& verts) const;
    std::vector<int> topo_sort_children(const std::vector<std::vector<int>>& groups,
                                        const std::vector<int>& verts) const;

    DiGraph graph_;
    std::vector<int> scc_of_;
    std::map<int, std::vector<int>> members_;  // ascending member lists
    std::map<int, int> label_;
    std::map<std::pair<int, int>, std::set<std::pair<int, int>>> cond_;
    std::map<int, std::set<int>> cond_out_, cond_in_;
    int next_id_ = 0;
    uint64_t version_ = 0;
};

}  // namespace dygraph
