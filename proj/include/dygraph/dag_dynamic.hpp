// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "dygraph/graph.hpp"
#include "dygraph/reach_engine.hpp"

namespace dygraph {

// Structures for graphs promised acyclic at all times. The promise is
// checked on every insertion (cheap given the engine) and violations are
// rejected, since a silently corrupted order would never heal.

// Fully dynamic topological order plus point-to-point path reporting.
// Maintains an array A (position -> vertex) and its inverse pi. An insertion
// u->v with pi(u) > pi(v) rewrites the window W = A[pi(v)..pi(u)] as S.Z.T
// where T is the part of W reachable from v, S the part reaching u, and Z the
// rest; each part keeps its previous relative order.
class DagPathStruct {
  public:
    explicit DagPathStruct(int n, uint64_t seed = 0, uint64_t prime = kDefaultPrime);

    int n() const { return graph_.n(); }
    const DiGraph& graph() const { return graph_; }
    ReachEngine& engine() { return engine_; }

    void insert_edge(int u, int v);
    void delete_edge(int u, int v);

    const std::vector<int>& order() const { return order_; }
    int position(int v) const { return pos_[v]; }

    // Simple s->t path, or nullopt when unreachable. Scans out-edges of the
    // current vertex in increasing position of their heads and descends into
    // the first head that reaches t; one engine query per candidate head.
    std::optional<PathWitness> query_path(int s, int t);

    // Engine queries spent by the most recent query_path call.
    uint64_t last_query_engine_queries() const { return last_query_queries_; }

    // The window decomposition of the last accepted insertion, for the
    // relative-order stability checks.
    struct Rewrite {
        bool rewritten = false;
        int lo = -1, hi = -1;
        std::vector<int> part_s, part_z, part_t;
    };
    const Rewrite& last_rewrite() const { return last_rewrite_; }

    const Counters& counters() const { return engine_.counters(); }

  private:
    bool walk_path(int s, int t, std::vector<int>& out);

    DiGraph graph_;
    ReachEngine engine_;
    std::vector<int> order_;  // position -> vertex
    std::vector<int> pos_;    // vertex -> position
    Rewrite last_rewrite_;
    uint64_t last_query_queries_ = 0;
};

// 3n-vertex gadget over V + two copies V', V'': for every graph edge uv it
// carries uv and u'v'', plus yy' for members y of Y. A u->v'' path exists iff
// some u->v path in the base graph has its penultimate vertex in Y.
class LayeredDetector {
  public:
    LayeredDetector(int n, uint64_t seed, uint64_t prime = kDefaultPrime);
    // Batch construction: one inversion instead of per-edge updates.
    LayeredDetector(int n, uint64_t seed, const std::vector<std::pair<int, int>>& edges,
                    const std::vector<int>& member_list, uint64_t prime = kDefaultPrime);

    void add_member(int y);
    bool is_member(int y) const { return members_[y] != 0; }
    const std::vector<char>& members() const { return members_; }

    void insert_edge(int u, int v);
    void delete_edge(int u, int v);

    bool query(int u, int v);
    void rebuild() { engine_.rebuild(); }

    const Counters& counters() const { return engine_.counters(); }

  private:
    int n_;
    std::vector<char> members_;
    ReachEngine engine_;
};

// Single-source reachability tree reporting on a DAG: q = ceil(n/delta)
// detectors with fixed label intervals of width delta locate, for every
// reachable t, the interval holding the minimum-id in-neighbor inside the
// reachable set.
class DagTreeStruct {
  public:
    // delta = 0 picks the default ceil(n^((1+rho)/2)) with rho = 0.529.
    DagTreeStruct(int n, uint64_t seed = 0, int delta = 0, uint64_t prime = kDefaultPrime);

    int n() const { return base_.n(); }
    int delta() const { return delta_; }
    const DiGraph& graph() const { return base_.graph(); }
    DagPathStruct& base() { return base_; }

    void insert_edge(int u, int v);
    void delete_edge(int u, int v);

    // Out-tree edges rooted at s spanning the reachable set, sorted by child.
    std::vector<std::pair<int, int>> query_tree(int s);

    Counters counters() const;

  private:
    std::vector<std::pair<int, int>> try_tree(int s);

    DagPathStruct base_;
    int delta_;
    std::vector<LayeredDetector> detectors_;
};

inline int default_dag_tree_delta(int n) {
    int d = int(std::ceil(std::pow(double(n), (1.0 + 0.529) / 2.0)));
    return std::max(1, std::min(n > 0 ? n : 1, d));
}

}  // namespace dygraph
