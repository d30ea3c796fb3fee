// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "dygraph/catpath.hpp"
#include "dygraph/graph.hpp"
#include "dygraph/products.hpp"

namespace dygraph {

// Deterministic incremental structures. Updates arrive in phases of
// F = ceil(n^alpha) events; each rollover runs a matrix-product based
// recomputation over the phase's inserted edges (all heads in a small set W)
// and the per-update work stays small. Nothing in this module is randomized;
// every structure also supports snapshot-based rollback, which the offline
// fully dynamic driver uses to replay a known update timeline.

inline int default_incr_phase_len(int n, double alpha = 0.529) {
    return std::max(1, int(std::ceil(std::pow(double(n), alpha))));
}

// Reachability trees for every source, as parent arrays: parent[s][v] is the
// tree parent of v in T(s), v itself for v == s, and -1 when unreachable.
using TreeSet = std::vector<std::vector<int>>;

TreeSet trees_for_graph(const DiGraph& g);

// Rebuilds all-source reachability trees of new_graph = old graph + new_edges
// from the previous trees, going through the condensation of the new graph:
// per-SCC in/out trees, condensation trees extracted from the old trees, and
// boolean closure over the components touched by new-edge heads, with
// product witnesses filling the missing condensation in-edges.
TreeSet trees_recompute(const TreeSet& old_trees, const DiGraph& new_graph,
                        const std::vector<std::pair<int, int>>& new_edges);

// Incremental reachability with incoming-edge updates and single-source
// tree queries.
class IncrTree {
  public:
    explicit IncrTree(int n, double alpha = 0.529, int phase_len = 0);

    int n() const { return g_.n(); }
    int phase_len() const { return phase_len_; }
    const DiGraph& graph() const { return g_; }

    void insert_incoming(int v, const std::vector<int>& tails);
    void insert_edge(int u, int v) { insert_incoming(v, {u}); }

    // Out-tree rooted at s spanning the reachable set, sorted by child.
    std::vector<std::pair<int, int>> query_tree(int s);

    void rollback_mark();
    void rollback();

  private:
    struct Snapshot {
        DiGraph g;
        TreeSet trees;
        std::vector<std::pair<int, std::vector<int>>> phase;
    };
    int phase_len_;
    DiGraph g_;
    TreeSet trees_;  // for the phase-start graph G0
    std::vector<std::pair<int, std::vector<int>>> phase_;
    std::vector<Snapshot> marks_;
};

// Incremental reachability with single-edge updates and simple-path queries.
// Maintains, for each phase edge e_i = u_i v_i, the path tables
// P[i][u] (u -> u_i) and Q[i][v] (v_i -> v) populated whenever the target
// was reachable before e_i arrived; a query concatenates across the
// smallest feasible i.
class IncrPath {
  public:
    explicit IncrPath(int n, double alpha = 0.529, int phase_len = 0);

    int n() const { return g_.n(); }
    int phase_len() const { return phase_len_; }
    const DiGraph& graph() const { return g_; }

    void insert_edge(int u, int v);
    std::optional<CatPath> query_path(int s, int t) const;

    void rollback_mark();
    void rollback();

  private:
    void rebuild_base();

    struct Snapshot {
        DiGraph g;
        TreeSet trees;
        std::vector<std::vector<CatPath>> base;
        std::vector<std::pair<int, int>> edges;
        std::vector<std::vector<CatPath>> ptab, qtab;
    };
    int phase_len_;
    DiGraph g_;
    TreeSet trees_;                          // phase-start graph G0
    std::vector<std::vector<CatPath>> base_; // simple G0 paths off the trees
    std::vector<std::pair<int, int>> edges_; // e_1..e_k of the current phase
    std::vector<std::vector<CatPath>> ptab_; // ptab_[i][u]: u -> u_{i+1}
    std::vector<std::vector<CatPath>> qtab_; // qtab_[i][v]: v_{i+1} -> v
    std::vector<Snapshot> marks_;
};

// A distance paired with a realizing path; dist == kInf means no entry.
struct PathEntry {
    double dist = kInf;
    CatPath path;
};
using PathMatrix = std::vector<std::vector<PathEntry>>;

PathMatrix empty_path_matrix(int n);

// (1+eps)-approximate shortest paths under single-edge insertions with real
// weights in [1, C]. Internally eps' = eps / (4 * ceil(log2 n)); matrices
// D_b (b = 1..ceil(log2(n/F))) stratify the update history so that any
// answer's recomputation lineage stays O(log n) deep, which keeps the
// accumulated stretch within (1+eps) end to end.
class ApproxPaths {
  public:
    ApproxPaths(int n, double eps, double weight_cap, double alpha = 0.529, int phase_len = 0);

    int n() const { return g_.n(); }
    int phase_len() const { return phase_len_; }
    double eps() const { return eps_; }
    double eps_prime() const { return eps_prime_; }
    const DiGraph& graph() const { return g_; }

    void insert_edge(int u, int v, double w);

    struct Answer {
        double dist;
        CatPath path;
    };
    std::optional<Answer> query(int s, int t) const;

    // Number of phases whose updates matrix D_b currently covers (tests
    // assert the stratification schedule through this).
    int covered_phases(int b) const { return cover_[size_t(b)]; }
    int bstar() const { return bstar_; }

    void rollback_mark();
    void rollback();

  private:
    struct WeightedEdge {
        int u, v;
        double w;
    };
    PathMatrix recompute(const PathMatrix& base, size_t lo_edge, size_t hi_edge) const;
    void phase_boundary(int j);

    int phase_len_;
    double eps_, eps_prime_, cap_;
    DiGraph g_;
    int bstar_;
    int completed_phases_ = 0;
    std::vector<WeightedEdge> history_;  // all inserted edges, phase p = [pF,(p+1)F)
    PathMatrix d_;                       // matrix for the current phase-start graph
    std::vector<PathMatrix> dbs_;        // D_b, 1-based index
    std::vector<int> cover_;             // phases covered by D_b
    struct Pending {
        PathMatrix matrix;
        int install_at = -1;
        int covers = 0;
    };
    std::vector<Pending> pending_;
    std::vector<std::vector<PathEntry>> ptab_, qtab_;  // live tables, per phase edge

    struct Snapshot;
    std::vector<std::shared_ptr<Snapshot>> marks_;
};

// Exact distances in an unweighted incremental digraph. The phase-start
// matrix holds exact distances up to h = ceil(n/F) with their paths; B is a
// greedy hitting set of every stored path of hop-length exactly h. Pair
// queries run Dijkstra on an auxiliary graph over {s,t} + phase endpoints +
// B; tree queries use an auxiliary graph over all of V.
class ExactPaths {
  public:
    explicit ExactPaths(int n, double alpha = 0.529, int phase_len = 0);

    int n() const { return g_.n(); }
    int phase_len() const { return phase_len_; }
    int h() const { return h_; }
    const DiGraph& graph() const { return g_; }
    const std::vector<int>& hitting_set() const { return hitting_; }
    const PathMatrix& matrix() const { return d_; }

    void insert_edge(int u, int v);
    void insert_incoming(int v, const std::vector<int>& tails);

    struct Answer {
        double dist;
        CatPath path;
    };
    std::optional<Answer> query_pair(int s, int t) const;

    struct TreeAnswer {
        std::vector<std::pair<int, int>> edges;  // sorted by child
        std::vector<double> dist;                // kInf where unreachable
    };
    TreeAnswer query_tree(int s) const;

    void rollback_mark();
    void rollback();

  private:
    void phase_rebuild();

    struct Snapshot {
        DiGraph g;
        PathMatrix d;
        std::vector<int> hitting;
        std::vector<std::pair<int, std::vector<int>>> phase;
    };
    int phase_len_, h_;
    DiGraph g_;
    PathMatrix d_;
    std::vector<int> hitting_;
    std::vector<std::pair<int, std::vector<int>>> phase_;  // (head, tails)
    std::vector<Snapshot> marks_;
};

// Offline fully dynamic driver: given the whole update timeline, answers
// queries about any version by replaying edge presence intervals over a
// segment tree of versions, inserting on entry and rolling back on exit.
struct OfflineQuery {
    enum class Kind { Path, Dist, Tree };
    int version;  // 0..t, the state after that many updates
    Kind kind;
    int s = -1, t = -1;
};

struct OfflineAnswer {
    std::optional<PathWitness> path;          // Path queries
    std::optional<double> dist;               // Dist queries; nullopt = INF
    std::vector<std::pair<int, int>> tree;    // Tree queries
    std::vector<char> tree_vertices;
};

std::vector<OfflineAnswer> offline_run(const DiGraph& initial,
                                       const std::vector<UpdateEvent>& timeline,
                                       const std::vector<OfflineQuery>& queries,
                                       double alpha = 0.529, int phase_len = 0);

}  // namespace dygraph
