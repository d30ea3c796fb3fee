// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "dygraph/counters.hpp"
#include "dygraph/field.hpp"
#include "dygraph/graph.hpp"

namespace dygraph {

// Randomized dynamic reachability. Every present edge uv carries a random
// nonzero field value x_uv; the engine maintains Ninv = (I - X)^-1 where
// X[u][v] = x_uv. For u != v, Ninv[u][v] != 0 certifies an u->v path, and a
// zero entry means "no path" with high probability. Single-edge updates cost
// one rank-1 inverse update; queries are entry reads.
//
// All randomness comes from the seed, so two engines fed the same update
// sequence are bit-identical. A singular update triggers a re-randomized
// rebuild (at most 3 attempts).
class ReachEngine {
  public:
    ReachEngine(int n, uint64_t seed, uint64_t prime = kDefaultPrime);
    ReachEngine(const DiGraph& g, uint64_t seed, uint64_t prime = kDefaultPrime);

    int n() const { return n_; }
    uint64_t rebuild_count() const { return counters_.rebuilds; }
    const Counters& counters() const { return counters_; }

    bool has_edge(int u, int v) const { return edge_values_.count({u, v}) != 0; }

    void insert_edge(int u, int v);
    void delete_edge(int u, int v);

    // u == v answers true without touching the inverse.
    bool query_reach(int u, int v);

    // Lemma-5.1 style explicit row block: reachability rows for an ordered,
    // duplicate-free vertex set R.
    void row_add(int r);
    void rows_reset();
    const std::vector<int>& row_set() const { return rows_; }
    std::vector<std::vector<char>> rows_read();
    std::vector<char> row_read(int r);

    // Undo log driven rollback; marks nest LIFO.
    void rollback_mark();
    void rollback();

    // Exactness check used by debug-mode tests: (I - X) * Ninv == I.
    bool inverse_is_exact() const;

    // Re-randomizes every edge value and re-inverts.
    void rebuild();

  private:
    struct UndoEntry {
        enum class Kind { Mark, Insert, Delete, RowAdd, RowReset, Snapshot } kind;
        int u = -1, v = -1;
        uint64_t value = 0;              // edge value for Insert/Delete
        std::vector<int> saved_rows;     // RowReset
        // Snapshot restores state around a rebuild.
        FieldMatrix saved_ninv;
        std::map<std::pair<int, int>, uint64_t> saved_edges;
    };

    uint64_t fresh_value();
    void apply_delta(int u, int v, uint64_t delta);
    void rebuild_inversion(bool count);

    int n_;
    Field field_;
    std::mt19937_64 rng_;
    std::map<std::pair<int, int>, uint64_t> edge_values_;
    FieldMatrix ninv_;
    std::vector<int> rows_;
    std::vector<UndoEntry> undo_;
    Counters counters_;
};

}  // namespace dygraph
