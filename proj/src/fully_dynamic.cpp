// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dygraph/fully_dynamic.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "dygraph/oracles.hpp"

namespace dygraph {

namespace {
constexpr uint64_t kForwardSalt = 0x9e3779b97f4a7c15ull;
constexpr uint64_t kReverseSalt = 0xc2b2ae3d27d4eb4full;
constexpr uint64_t kRowSalt = 0x165667b19e3779f9ull;

uint64_t mix_seed(uint64_t seed, uint64_t salt, uint64_t extra) {
    uint64_t x = seed ^ salt ^ (extra * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdull;
    x ^= x >> 33;
    return x;
}
}  // namespace

FdScc::FdScc(int n, uint64_t seed, int phase_len, uint64_t prime)
    : g_(n),
      phase_len_(phase_len > 0 ? phase_len : default_phase_len(n)),
      prime_(prime),
      dec_(std::make_unique<DecSccState>(g_)),
      fwd_(n, mix_seed(seed, kForwardSalt, 0), prime),
      rev_(n, mix_seed(seed, kReverseSalt, 0), prime) {}

void FdScc::sync_rows() {
    fwd_.rows_reset();
    rev_.rows_reset();
    std::vector<char> seen(g_.n(), 0);
    for (auto [u, v] : eplus_) {
        (void)u;
        if (!seen[v]) {
            seen[v] = 1;
            fwd_.row_add(v);
            rev_.row_add(v);
        }
    }
}

void FdScc::rollover() {
    dec_ = std::make_unique<DecSccState>(g_);
    eplus_.clear();
    fwd_.rows_reset();
    rev_.rows_reset();
}

void FdScc::insert_edge(int u, int v) {
    g_.insert_edge(u, v);
    fwd_.insert_edge(u, v);
    rev_.insert_edge(v, u);
    eplus_.push_back({u, v});
    sync_rows();
    if (int(eplus_.size()) >= phase_len_) rollover();
}

void FdScc::delete_edge(int u, int v) {
    g_.delete_edge(u, v);
    fwd_.delete_edge(u, v);
    rev_.delete_edge(v, u);
    auto it = std::find(eplus_.begin(), eplus_.end(), std::pair<int, int>{u, v});
    if (it != eplus_.end()) {
        eplus_.erase(it);
        sync_rows();
    } else {
        dec_->delete_edge(u, v);
    }
}

void FdScc::apply(const UpdateEvent& e) {
    switch (e.kind) {
        case UpdateEvent::Kind::InsertEdge:
            insert_edge(e.u, e.v);
            break;
        case UpdateEvent::Kind::DeleteEdge:
            delete_edge(e.u, e.v);
            break;
        case UpdateEvent::Kind::InsertIncoming:
            throw EngineMismatch("fully dynamic structures take single-edge events");
    }
}

std::vector<int> FdScc::components() {
    int n = g_.n();
    // Certificate graph: a cycle per decremental component plus reachability
    // stars around the heads of this phase's insertions.
    std::vector<std::vector<int>> adj(n);
    for (int id : dec_->component_ids()) {
        const auto& m = dec_->members(id);
        if (m.size() < 2) continue;
        for (size_t i = 0; i < m.size(); ++i) adj[m[i]].push_back(m[(i + 1) % m.size()]);
    }
    for (int y : fwd_.row_set()) {
        auto out = fwd_.row_read(y);
        auto in = rev_.row_read(y);
        for (int w = 0; w < n; ++w) {
            if (w == y) continue;
            if (out[w]) adj[y].push_back(w);
            if (in[w]) adj[w].push_back(y);
        }
    }
    return scc_labels(adj);
}

Counters FdScc::counters() const {
    Counters total = fwd_.counters();
    total += rev_.counters();
    return total;
}

PhaseCore::PhaseCore(int n, uint64_t seed, int phase_len, uint64_t prime)
    : g_(n),
      phase_len_(phase_len > 0 ? phase_len : default_phase_len(n)),
      seed_(seed),
      prime_(prime),
      dec_(std::make_unique<DecSccState>(g_)),
      q_(n, mix_seed(seed, kForwardSalt, 1), prime),
      d_(n, mix_seed(seed, kRowSalt, 1), prime) {}

void PhaseCore::sync_rows() {
    d_.rows_reset();
    std::vector<char> seen(g_.n(), 0);
    for (auto [u, v] : eplus_) {
        (void)u;
        if (!seen[v]) {
            seen[v] = 1;
            d_.row_add(v);
        }
    }
}

void PhaseCore::rollover() {
    for (auto [u, v] : eplus_) {
        q_.insert_edge(u, v);
        d_.insert_edge(u, v);
    }
    dec_ = std::make_unique<DecSccState>(g_);
    eplus_.clear();
    d_.rows_reset();
    on_phase_start();
}

void PhaseCore::insert_edge(int u, int v) {
    g_.insert_edge(u, v);
    eplus_.push_back({u, v});
    sync_rows();
    if (int(eplus_.size()) >= phase_len_) rollover();
}

void PhaseCore::delete_edge(int u, int v) {
    g_.delete_edge(u, v);
    auto it = std::find(eplus_.begin(), eplus_.end(), std::pair<int, int>{u, v});
    if (it != eplus_.end()) {
        eplus_.erase(it);
        sync_rows();
        return;
    }
    auto splits = dec_->delete_edge(u, v);
    q_.delete_edge(u, v);
    d_.delete_edge(u, v);
    on_deletion(u, v);
    on_splits(splits);
}

void PhaseCore::apply(const UpdateEvent& e) {
    switch (e.kind) {
        case UpdateEvent::Kind::InsertEdge:
            insert_edge(e.u, e.v);
            break;
        case UpdateEvent::Kind::DeleteEdge:
            delete_edge(e.u, e.v);
            break;
        case UpdateEvent::Kind::InsertIncoming:
            throw EngineMismatch("fully dynamic structures take single-edge events");
    }
}

void PhaseCore::rebuild_engines() {
    ++rebuild_salt_;
    q_.rebuild();
    d_.rebuild();
}

PhaseCore::Partition PhaseCore::query_partition(int s) {
    g_.check_vertex(s);
    int n = g_.n();
    int k = int(eplus_.size());
    Partition part;
    part.index_of.assign(n, -1);
    part.union_mask.assign(n, 0);
    part.sets.assign(k + 1, {});
    for (int v = 0; v < n; ++v) {
        if (q_.query_reach(s, v)) {
            part.index_of[v] = 0;
            part.union_mask[v] = 1;
            part.sets[0].push_back(v);
        }
    }
    part.used.push_back(0);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 1; i <= k; ++i) {
            auto [ui, vi] = eplus_[i - 1];
            if (!part.union_mask[ui] || part.union_mask[vi]) continue;
            auto row = d_.row_read(vi);
            for (int w = 0; w < n; ++w) {
                if (row[w] && !part.union_mask[w]) {
                    part.index_of[w] = i;
                    part.union_mask[w] = 1;
                    part.sets[i].push_back(w);
                }
            }
            part.parent[i] = part.index_of[ui];
            part.used.push_back(i);
            grew = true;
            break;  // restart from the smallest eligible index
        }
    }
    return part;
}

int PhaseCore::set_source(int index, int s) const {
    return index == 0 ? s : eplus_[index - 1].second;
}

std::vector<int> PhaseCore::path_within_cell(int p, int q, const std::vector<char>& cell) {
    int from_comp = dec_->component_of(p);
    int to_comp = dec_->component_of(q);
    std::vector<std::pair<int, int>> hops;  // representative edges between components
    int cur = from_comp;
    while (cur != to_comp) {
        std::vector<std::pair<int, int>> cands;  // (label, component)
        for (int z : dec_->cond_out(cur)) {
            if (!cell[dec_->members(z).front()]) continue;
            cands.push_back({dec_->label_of(z), z});
        }
        std::sort(cands.begin(), cands.end());
        int next = -1;
        std::pair<int, int> rep{-1, -1};
        for (auto [lbl, z] : cands) {
            (void)lbl;
            auto e = dec_->representative_edge(cur, z);
            if (q_.query_reach(e.second, q)) {
                next = z;
                rep = e;
                break;
            }
        }
        if (next == -1) throw InternalInconsistency("condensation scan found no viable hop");
        hops.push_back(rep);
        cur = next;
    }
    std::vector<int> verts{p};
    auto extend = [&](const std::vector<int>& piece) {
        verts.insert(verts.end(), piece.begin() + 1, piece.end());
    };
    int at = p;
    for (auto [a, b] : hops) {
        extend(dec_->path_in_scc(at, a).vertices);
        verts.push_back(b);
        at = b;
    }
    extend(dec_->path_in_scc(at, q).vertices);
    return verts;
}

Counters PhaseCore::counters() const {
    Counters total = q_.counters();
    total += d_.counters();
    return total;
}

FdPath::FdPath(int n, uint64_t seed, int phase_len, uint64_t prime)
    : PhaseCore(n, seed, phase_len, prime) {}

std::optional<PathWitness> FdPath::try_path(int s, int t) {
    auto part = query_partition(s);
    if (part.index_of[t] == -1) return std::nullopt;
    std::vector<int> chain;
    for (int j = part.index_of[t];; j = part.parent.at(j)) {
        chain.push_back(j);
        if (j == 0) break;
    }
    std::reverse(chain.begin(), chain.end());
    int n = g_.n();
    std::vector<int> verts{s};
    for (size_t li = 0; li < chain.size(); ++li) {
        int idx = chain[li];
        int p = set_source(idx, s);
        int q = (li + 1 < chain.size()) ? eplus_[chain[li + 1] - 1].first : t;
        std::vector<char> cell(n, 0);
        for (int v : part.sets[idx]) cell[v] = 1;
        auto leg = path_within_cell(p, q, cell);
        verts.insert(verts.end(), leg.begin() + 1, leg.end());
        if (li + 1 < chain.size()) {
            verts.push_back(eplus_[chain[li + 1] - 1].second);
        }
    }
    return PathWitness{verts, double(verts.size() - 1)};
}

std::optional<PathWitness> FdPath::query_path(int s, int t) {
    g_.check_vertex(s);
    g_.check_vertex(t);
    try {
        return try_path(s, t);
    } catch (const InternalInconsistency&) {
        rebuild_engines();
        return try_path(s, t);
    }
}

FdTree::FdTree(int n, uint64_t seed, int phase_len, int delta, uint64_t prime)
    : PhaseCore(n, seed, phase_len, prime),
      delta_(delta > 0 ? delta : default_fd_delta(n)),
      y_of_(n, -1) {
    on_phase_start();
}

int FdTree::fitting_block(int comp) const {
    int lbl = dec_->label_of(comp);
    int size = dec_->size_of(comp);
    int b1 = lbl / delta_, b2 = (lbl + size - 1) / delta_;
    return b1 == b2 ? b1 : -1;
}

bool FdTree::is_special(int comp) const { return fitting_block(comp) < 0; }

int FdTree::special_count() const {
    int count = 0;
    for (int id : dec_->component_ids()) {
        if (is_special(id)) ++count;
    }
    return count;
}

void FdTree::absorb_component(int comp) {
    int block = fitting_block(comp);
    if (block < 0) return;
    for (int v : dec_->members(comp)) {
        if (y_of_[v] == -1) {
            y_of_[v] = block;
            detectors_[block].add_member(v);
        } else if (y_of_[v] != block) {
            // Nesting guarantees a vertex never migrates between intervals.
            throw InternalInconsistency("vertex moved between detector intervals");
        }
    }
}

void FdTree::on_phase_start() {
    int n = g_.n();
    ++rebuild_salt_;
    y_of_.assign(n, -1);
    detectors_.clear();
    int blocks = (n + delta_ - 1) / delta_;
    auto edges = dec_->graph().edges();
    std::vector<std::vector<int>> block_members(blocks);
    for (int comp : dec_->component_ids()) {
        int b = fitting_block(comp);
        if (b < 0) continue;
        for (int v : dec_->members(comp)) {
            y_of_[v] = b;
            block_members[b].push_back(v);
        }
    }
    detectors_.reserve(blocks);
    for (int i = 0; i < blocks; ++i) {
        std::sort(block_members[i].begin(), block_members[i].end());
        detectors_.emplace_back(n, mix_seed(seed_, kRowSalt, rebuild_salt_ * 131 + i), edges,
                                block_members[i], prime_);
    }
}

void FdTree::on_deletion(int u, int v) {
    for (auto& det : detectors_) det.delete_edge(u, v);
}

void FdTree::on_splits(const std::vector<DecSccState::Split>& splits) {
    for (const auto& split : splits) {
        for (int child : split.children) absorb_component(child);
    }
}

std::vector<std::pair<int, int>> FdTree::try_tree(int s) {
    int n = g_.n();
    auto part = query_partition(s);
    std::set<std::pair<int, int>> hedges;
    for (int idx : part.used) {
        int vi = set_source(idx, s);
        std::vector<char> cell(n, 0);
        for (int v : part.sets[idx]) cell[v] = 1;
        // (1) For every target, the first detector seeing a path from vi with
        // a penultimate vertex in its interval contributes all matching
        // in-edges inside the cell.
        for (int t : part.sets[idx]) {
            if (t == vi) continue;
            int fired = -1;
            for (size_t j = 0; j < detectors_.size(); ++j) {
                if (detectors_[j].query(vi, t)) {
                    fired = int(j);
                    break;
                }
            }
            if (fired < 0) continue;  // every viable tail is special
            for (int w : dec_->graph().in_edges(t)) {
                if (cell[w] && y_of_[w] == fired) hedges.insert({w, t});
            }
        }
        // (2) Representative condensation edges incident to special
        // components inside the cell.
        std::set<int> comps;
        for (int v : part.sets[idx]) comps.insert(dec_->component_of(v));
        for (int z : comps) {
            if (!is_special(z)) continue;
            for (int x : dec_->cond_out(z)) {
                if (comps.count(x)) hedges.insert(dec_->representative_edge(z, x));
            }
            for (int x : dec_->cond_in(z)) {
                if (comps.count(x)) hedges.insert(dec_->representative_edge(x, z));
            }
        }
        // (3) Sparse strongly connected subgraphs of every cell component.
        for (int c : comps) {
            for (auto e : dec_->scc_subgraph(c)) hedges.insert(e);
        }
    }
    for (int idx : part.used) {
        if (idx != 0) hedges.insert(eplus_[idx - 1]);
    }
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : hedges) adj[a].push_back(b);
    std::vector<int> parent(n, -1);
    std::vector<char> seen(n, 0);
    std::queue<int> bfs;
    bfs.push(s);
    seen[s] = 1;
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int w : adj[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = u;
                bfs.push(w);
            }
        }
    }
    std::vector<std::pair<int, int>> tree;
    for (int v = 0; v < n; ++v) {
        if (seen[v] != part.union_mask[v]) {
            throw InternalInconsistency("certificate subgraph does not span the reachable set");
        }
        if (v != s && seen[v]) tree.push_back({parent[v], v});
    }
    return tree;
}

std::vector<std::pair<int, int>> FdTree::query_tree(int s) {
    g_.check_vertex(s);
    try {
        return try_tree(s);
    } catch (const InternalInconsistency&) {
        rebuild_engines();
        for (auto& det : detectors_) det.rebuild();
        return try_tree(s);
    }
}

Counters FdTree::counters() const {
    Counters total = PhaseCore::counters();
    for (const auto& det : detectors_) {
        const Counters& c = det.counters();
        total.detector_queries += c.engine_queries;
        total.rank1_updates += c.rank1_updates;
        total.rebuilds += c.rebuilds;
    }
    return total;
}

}  // namespace dygraph
