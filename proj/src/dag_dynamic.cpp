// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dygraph/dag_dynamic.hpp"

#include <algorithm>

namespace dygraph {

DagPathStruct::DagPathStruct(int n, uint64_t seed, uint64_t prime)
    : graph_(n), engine_(n, seed, prime), order_(n), pos_(n) {
    for (int i = 0; i < n; ++i) order_[i] = pos_[i] = i;
}

void DagPathStruct::insert_edge(int u, int v) {
    graph_.check_vertex(u);
    graph_.check_vertex(v);
    if (u == v) throw CycleIntroduced(u, v);
    if (graph_.has_edge(u, v)) throw DuplicateEdge(u, v);
    last_rewrite_ = Rewrite{};
    if (pos_[u] > pos_[v]) {
        int lo = pos_[v], hi = pos_[u];
        // Classify the window against the pre-insertion graph.
        std::vector<int> part_s, part_z, part_t;
        for (int p = lo; p <= hi; ++p) {
            int w = order_[p];
            bool reaches_u = engine_.query_reach(w, u);
            bool from_v = engine_.query_reach(v, w);
            if (reaches_u && from_v) throw CycleIntroduced(u, v);
            if (reaches_u) {
                part_s.push_back(w);
            } else if (from_v) {
                part_t.push_back(w);
            } else {
                part_z.push_back(w);
            }
        }
        int p = lo;
        for (int w : part_s) order_[p++] = w;
        for (int w : part_z) order_[p++] = w;
        for (int w : part_t) order_[p++] = w;
        for (int q = lo; q <= hi; ++q) pos_[order_[q]] = q;
        last_rewrite_ = {true, lo, hi, std::move(part_s), std::move(part_z), std::move(part_t)};
    }
    graph_.insert_edge(u, v);
    engine_.insert_edge(u, v);
}

void DagPathStruct::delete_edge(int u, int v) {
    graph_.delete_edge(u, v);  // order stays valid for any subgraph
    engine_.delete_edge(u, v);
    last_rewrite_ = Rewrite{};
}

bool DagPathStruct::walk_path(int s, int t, std::vector<int>& out) {
    out.assign(1, s);
    int cur = s;
    while (cur != t) {
        std::vector<int> heads = graph_.out_edges(cur);
        std::sort(heads.begin(), heads.end(),
                  [&](int a, int b) { return pos_[a] < pos_[b]; });
        int next = -1;
        for (int x : heads) {
            if (engine_.query_reach(x, t)) {
                next = x;
                break;
            }
        }
        if (next == -1) return false;  // contradicts the existence answer
        out.push_back(next);
        cur = next;
    }
    return true;
}

std::optional<PathWitness> DagPathStruct::query_path(int s, int t) {
    graph_.check_vertex(s);
    graph_.check_vertex(t);
    uint64_t start = engine_.counters().engine_queries;
    std::optional<PathWitness> result;
    if (!engine_.query_reach(s, t)) {
        result = std::nullopt;
    } else if (s == t) {
        result = PathWitness::empty_at(s);
    } else {
        std::vector<int> vertices;
        if (walk_path(s, t, vertices)) {
            result = PathWitness{vertices, double(vertices.size() - 1)};
        } else {
            // Randomness failure: a reported-reachable target has no viable
            // first hop. Rebuild and retry once.
            engine_.rebuild();
            if (!engine_.query_reach(s, t)) {
                result = std::nullopt;
            } else if (walk_path(s, t, vertices)) {
                result = PathWitness{vertices, double(vertices.size() - 1)};
            } else {
                throw InternalInconsistency("dag path walk failed twice");
            }
        }
    }
    last_query_queries_ = engine_.counters().engine_queries - start;
    return result;
}

LayeredDetector::LayeredDetector(int n, uint64_t seed, uint64_t prime)
    : n_(n), members_(n, 0), engine_(3 * n, seed, prime) {}

namespace {
DiGraph layered_graph(int n, const std::vector<std::pair<int, int>>& edges,
                      const std::vector<int>& member_list) {
    DiGraph g(3 * n);
    for (auto [u, v] : edges) {
        g.insert_edge(u, v);
        g.insert_edge(n + u, 2 * n + v);
    }
    for (int y : member_list) g.insert_edge(y, n + y);
    return g;
}
}  // namespace

LayeredDetector::LayeredDetector(int n, uint64_t seed,
                                 const std::vector<std::pair<int, int>>& edges,
                                 const std::vector<int>& member_list, uint64_t prime)
    : n_(n), members_(n, 0), engine_(layered_graph(n, edges, member_list), seed, prime) {
    for (int y : member_list) members_[y] = 1;
}

void LayeredDetector::add_member(int y) {
    if (members_[y]) return;
    members_[y] = 1;
    engine_.insert_edge(y, n_ + y);
}

void LayeredDetector::insert_edge(int u, int v) {
    engine_.insert_edge(u, v);
    engine_.insert_edge(n_ + u, 2 * n_ + v);
}

void LayeredDetector::delete_edge(int u, int v) {
    engine_.delete_edge(u, v);
    engine_.delete_edge(n_ + u, 2 * n_ + v);
}

bool LayeredDetector::query(int u, int v) {
    return engine_.query_reach(u, 2 * n_ + v);
}

DagTreeStruct::DagTreeStruct(int n, uint64_t seed, int delta, uint64_t prime)
    : base_(n, seed, prime), delta_(delta > 0 ? delta : default_dag_tree_delta(n)) {
    int q = (n + delta_ - 1) / delta_;
    detectors_.reserve(q);
    for (int i = 0; i < q; ++i) {
        detectors_.emplace_back(n, seed * 31 + 17 * (i + 1), prime);
        int lo = i * delta_, hi = std::min(n, (i + 1) * delta_);
        for (int y = lo; y < hi; ++y) detectors_[i].add_member(y);
    }
}

void DagTreeStruct::insert_edge(int u, int v) {
    base_.insert_edge(u, v);  // throws before detectors see a bad update
    for (auto& d : detectors_) d.insert_edge(u, v);
}

void DagTreeStruct::delete_edge(int u, int v) {
    base_.delete_edge(u, v);
    for (auto& d : detectors_) d.delete_edge(u, v);
}

std::vector<std::pair<int, int>> DagTreeStruct::try_tree(int s) {
    int n = base_.n();
    std::vector<char> reach(n, 0);
    for (int t = 0; t < n; ++t) reach[t] = base_.engine().query_reach(s, t) ? 1 : 0;
    std::vector<std::pair<int, int>> edges;
    for (int t = 0; t < n; ++t) {
        if (!reach[t] || t == s) continue;
        int interval = -1;
        for (size_t j = 0; j < detectors_.size(); ++j) {
            if (detectors_[j].query(s, t)) {
                interval = int(j);
                break;
            }
        }
        if (interval == -1) throw InternalInconsistency("no detector fired for reachable target");
        int lo = interval * delta_, hi = std::min(n, (interval + 1) * delta_);
        int best = -1;
        for (int y : base_.graph().in_edges(t)) {
            if (y >= lo && y < hi && reach[y]) {
                best = y;  // in-edges are sorted ascending
                break;
            }
        }
        if (best == -1) throw InternalInconsistency("detector interval holds no viable tail");
        edges.emplace_back(best, t);
    }
    return edges;
}

std::vector<std::pair<int, int>> DagTreeStruct::query_tree(int s) {
    base_.graph().check_vertex(s);
    try {
        return try_tree(s);
    } catch (const InternalInconsistency&) {
        base_.engine().rebuild();
        for (auto& d : detectors_) d.rebuild();
        return try_tree(s);
    }
}

Counters DagTreeStruct::counters() const {
    Counters total = base_.counters();
    for (const auto& d : detectors_) {
        const Counters& c = d.counters();
        total.detector_queries += c.engine_queries;
        total.rank1_updates += c.rank1_updates;
        total.rebuilds += c.rebuilds;
    }
    return total;
}

}  // namespace dygraph
