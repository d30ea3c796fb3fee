// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dygraph/reach_engine.hpp"

namespace dygraph {

ReachEngine::ReachEngine(int n, uint64_t seed, uint64_t prime)
    : n_(n), field_(prime), rng_(seed), ninv_(FieldMatrix::identity(n, field_)) {}

ReachEngine::ReachEngine(const DiGraph& g, uint64_t seed, uint64_t prime)
    : n_(g.n()), field_(prime), rng_(seed), ninv_(FieldMatrix::identity(g.n(), field_)) {
    for (auto [u, v] : g.edges()) edge_values_[{u, v}] = 0;
    if (!edge_values_.empty()) rebuild_inversion(/*count=*/false);
}

uint64_t ReachEngine::fresh_value() {
    return rng_() % (field_.p() - 1) + 1;
}

void ReachEngine::apply_delta(int u, int v, uint64_t delta) {
    rank1_update_inplace(ninv_, u, v, delta);
    counters_.rank1_updates++;
}

// Redraws every edge value and inverts I - X from scratch; up to 3 attempts.
void ReachEngine::rebuild_inversion(bool count) {
    for (int attempt = 0; attempt < 3; ++attempt) {
        for (auto& [e, x] : edge_values_) x = fresh_value();
        FieldMatrix m = FieldMatrix::identity(n_, field_);
        for (const auto& [e, x] : edge_values_) m.at(e.first, e.second) = field_.neg(x);
        try {
            ninv_ = invert(m);
            if (count) counters_.rebuilds++;
            return;
        } catch (const Singular&) {
        }
    }
    throw RandomnessExhausted();
}

void ReachEngine::rebuild() {
    UndoEntry snap{UndoEntry::Kind::Snapshot};
    snap.saved_ninv = ninv_;
    snap.saved_edges = edge_values_;
    rebuild_inversion(/*count=*/true);
    undo_.push_back(std::move(snap));
}

void ReachEngine::insert_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) {
        throw Error("bad engine edge " + std::to_string(u) + "->" + std::to_string(v));
    }
    if (edge_values_.count({u, v})) throw DuplicateEdge(u, v);
    uint64_t x = fresh_value();
    try {
        apply_delta(u, v, field_.neg(x));
        edge_values_[{u, v}] = x;
        undo_.push_back({UndoEntry::Kind::Insert, u, v, x});
    } catch (const Singular&) {
        UndoEntry snap{UndoEntry::Kind::Snapshot};
        snap.saved_ninv = ninv_;
        snap.saved_edges = edge_values_;
        edge_values_[{u, v}] = x;
        rebuild_inversion(/*count=*/true);
        undo_.push_back(std::move(snap));
    }
}

void ReachEngine::delete_edge(int u, int v) {
    auto it = edge_values_.find({u, v});
    if (it == edge_values_.end()) throw MissingEdge(u, v);
    uint64_t x = it->second;
    try {
        apply_delta(u, v, x);
        edge_values_.erase(it);
        undo_.push_back({UndoEntry::Kind::Delete, u, v, x});
    } catch (const Singular&) {
        UndoEntry snap{UndoEntry::Kind::Snapshot};
        snap.saved_ninv = ninv_;
        snap.saved_edges = edge_values_;
        edge_values_.erase({u, v});
        rebuild_inversion(/*count=*/true);
        undo_.push_back(std::move(snap));
    }
}

bool ReachEngine::query_reach(int u, int v) {
    counters_.engine_queries++;
    if (u == v) return true;
    return ninv_.at(u, v) != 0;
}

void ReachEngine::row_add(int r) {
    for (int existing : rows_) {
        if (existing == r) throw DuplicateRow(r);
    }
    rows_.push_back(r);
    undo_.push_back({UndoEntry::Kind::RowAdd});
}

void ReachEngine::rows_reset() {
    UndoEntry e{UndoEntry::Kind::RowReset};
    e.saved_rows = rows_;
    undo_.push_back(std::move(e));
    rows_.clear();
}

std::vector<char> ReachEngine::row_read(int r) {
    std::vector<char> row(n_, 0);
    for (int v = 0; v < n_; ++v) row[v] = (r == v || ninv_.at(r, v) != 0) ? 1 : 0;
    return row;
}

std::vector<std::vector<char>> ReachEngine::rows_read() {
    std::vector<std::vector<char>> out;
    out.reserve(rows_.size());
    for (int r : rows_) out.push_back(row_read(r));
    return out;
}

void ReachEngine::rollback_mark() {
    undo_.push_back({UndoEntry::Kind::Mark});
}

void ReachEngine::rollback() {
    bool has_mark = false;
    for (const auto& e : undo_) {
        if (e.kind == UndoEntry::Kind::Mark) {
            has_mark = true;
            break;
        }
    }
    if (!has_mark) throw NoMark();
    while (true) {
        UndoEntry e = std::move(undo_.back());
        undo_.pop_back();
        switch (e.kind) {
            case UndoEntry::Kind::Mark:
                return;
            case UndoEntry::Kind::Insert:
                // Inverse of the insert's rank-1 change; exact in the field.
                rank1_update_inplace(ninv_, e.u, e.v, e.value);
                edge_values_.erase({e.u, e.v});
                break;
            case UndoEntry::Kind::Delete:
                rank1_update_inplace(ninv_, e.u, e.v, field_.neg(e.value));
                edge_values_[{e.u, e.v}] = e.value;
                break;
            case UndoEntry::Kind::RowAdd:
                rows_.pop_back();
                break;
            case UndoEntry::Kind::RowReset:
                rows_ = std::move(e.saved_rows);
                break;
            case UndoEntry::Kind::Snapshot:
                ninv_ = std::move(e.saved_ninv);
                edge_values_ = std::move(e.saved_edges);
                break;
        }
    }
}

bool ReachEngine::inverse_is_exact() const {
    FieldMatrix m = FieldMatrix::identity(n_, field_);
    for (const auto& [e, x] : edge_values_) m.at(e.first, e.second) = field_.neg(x);
    return m.multiply(ninv_).is_identity();
}

}  // namespace dygraph
