// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "dygraph/dag_dynamic.hpp"
#include "dygraph/dec_scc.hpp"
#include "dygraph/graph.hpp"
#include "dygraph/reach_engine.hpp"

namespace dygraph {

// Phase-based fully dynamic structures for general digraphs. A phase spans F
// edge insertions; the decremental substructures are rebuilt on the current
// graph at every rollover, while deletions flow through continuously. E+
// holds the current phase's inserted-and-not-deleted edges; the maintained
// graph is always g = g^- u E+.

inline int default_phase_len(int n) {
    return std::max(1, int(std::ceil(std::sqrt(double(n)))));
}

inline int default_fd_delta(int n) {
    int d = int(std::ceil(std::pow(double(n), 0.765)));
    return std::max(1, std::min(n > 0 ? n : 1, d));
}

// Fully dynamic strongly connected components. Point engines maintain the
// current graph in both directions with R = heads of E+; components are read
// off a certificate graph: one cycle per decremental SCC plus, per head y,
// star edges y->w (y reaches w) and w->y (w reaches y).
class FdScc {
  public:
    FdScc(int n, uint64_t seed = 0, int phase_len = 0, uint64_t prime = kDefaultPrime);

    int n() const { return g_.n(); }
    int phase_len() const { return phase_len_; }
    const DiGraph& graph() const { return g_; }
    const DecSccState& dec() const { return *dec_; }
    const std::vector<std::pair<int, int>>& phase_insertions() const { return eplus_; }

    void insert_edge(int u, int v);
    void delete_edge(int u, int v);
    void apply(const UpdateEvent& e);

    // Canonical partition (vertex -> minimum member id of its component).
    std::vector<int> components();

    Counters counters() const;

  private:
    void sync_rows();
    void rollover();

    DiGraph g_;
    int phase_len_;
    uint64_t prime_;
    std::unique_ptr<DecSccState> dec_;  // over g^-
    ReachEngine fwd_, rev_;             // over g and its reverse
    std::vector<std::pair<int, int>> eplus_;
};

// Shared machinery for the path- and tree-reporting structures: the
// decremental core over g^-, a point-query engine Q over g^-, a row engine D
// over g^- with R = heads of E+, and the Lemma-style query partition of the
// vertices reachable from s.
class PhaseCore {
  public:
    PhaseCore(int n, uint64_t seed, int phase_len, uint64_t prime);
    virtual ~PhaseCore() = default;

    int n() const { return g_.n(); }
    int phase_len() const { return phase_len_; }
    const DiGraph& graph() const { return g_; }
    const DiGraph& minus_graph() const { return dec_->graph(); }
    DecSccState& dec() { return *dec_; }
    const std::vector<std::pair<int, int>>& phase_insertions() const { return eplus_; }

    void insert_edge(int u, int v);
    void delete_edge(int u, int v);
    void apply(const UpdateEvent& e);

    // Partition of the vertices reachable from s: set 0 grows from s inside
    // g^-; set i (1-based position in E+) grows from the head v_i; every
    // v_i -> z path in g^- stays inside set i. Parent pointers form an
    // out-tree on the used indices rooted at 0.
    struct Partition {
        std::vector<int> index_of;            // vertex -> set index, -1 outside
        std::vector<std::vector<int>> sets;   // set index -> ascending members
        std::map<int, int> parent;            // used index != 0 -> parent index
        std::vector<int> used;                // indices with nonempty sets
        std::vector<char> union_mask;
    };
    Partition query_partition(int s);

    Counters counters() const;

  protected:
    // Source vertex of a set index (s for 0, the head of e_i otherwise).
    int set_source(int index, int s) const;
    // Topologically earliest components scan inside one partition cell:
    // returns the p -> q path confined to that cell, lifted to vertices.
    std::vector<int> path_within_cell(int p, int q, const std::vector<char>& cell);

    virtual void on_phase_start() {}
    virtual void on_deletion(int u, int v) {}
    virtual void on_splits(const std::vector<DecSccState::Split>& splits) { (void)splits; }
    void rebuild_engines();

    DiGraph g_;
    int phase_len_;
    uint64_t seed_, prime_;
    uint64_t rebuild_salt_ = 0;
    std::unique_ptr<DecSccState> dec_;
    ReachEngine q_, d_;
    std::vector<std::pair<int, int>> eplus_;

  private:
    void sync_rows();
    void rollover();
};

// Point-to-point path reporting (amortized fully dynamic).
class FdPath : public PhaseCore {
  public:
    FdPath(int n, uint64_t seed = 0, int phase_len = 0, uint64_t prime = kDefaultPrime);

    // Simple s->t path or nullopt. Retries once over fresh randomness when
    // the engines contradict themselves.
    std::optional<PathWitness> query_path(int s, int t);

  private:
    std::optional<PathWitness> try_path(int s, int t);
};

// Single-source reachability tree reporting.
class FdTree : public PhaseCore {
  public:
    FdTree(int n, uint64_t seed = 0, int phase_len = 0, int delta = 0,
           uint64_t prime = kDefaultPrime);

    int delta() const { return delta_; }

    // Out-tree rooted at s spanning the reachable set, sorted by child.
    std::vector<std::pair<int, int>> query_tree(int s);

    // Components whose label interval straddles a delta-block boundary.
    int special_count() const;
    bool is_special(int comp) const;
    int y_index_of(int vertex) const { return y_of_[vertex]; }

    Counters counters() const;

  protected:
    void on_phase_start() override;
    void on_deletion(int u, int v) override;
    void on_splits(const std::vector<DecSccState::Split>& splits) override;

  private:
    // Block index when the component's interval fits one block, else -1.
    int fitting_block(int comp) const;
    void absorb_component(int comp);
    std::vector<std::pair<int, int>> try_tree(int s);

    int delta_ = 0;
    std::vector<LayeredDetector> detectors_;
    std::vector<int> y_of_;  // vertex -> detector index, -1 when unassigned
};

}  // namespace dygraph
