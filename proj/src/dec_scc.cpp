// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dygraph/dec_scc.hpp"

#include <algorithm>
#include <queue>

namespace dygraph {

namespace {

// Iterative Tarjan restricted to the vertices with mask != 0.
std::vector<std::vector<int>> scc_groups(const DiGraph& g, const std::vector<int>& verts,
                                         const std::vector<char>& mask) {
    int n = g.n();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<char> on_stack(n, 0);
    int next_index = 0, next_comp = 0;
    struct Frame {
        int v;
        size_t edge;
    };
    for (int root : verts) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& out = g.out_edges(f.v);
            if (f.edge < out.size()) {
                int w = out[f.edge++];
                if (!mask[w]) continue;
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = next_comp;
                    } while (w != f.v);
                    ++next_comp;
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }
    std::vector<std::vector<int>> groups(next_comp);
    for (int v : verts) groups[comp[v]].push_back(v);
    for (auto& grp : groups) std::sort(grp.begin(), grp.end());
    return groups;
}

}  // namespace

DecSccState::DecSccState(const DiGraph& g) : graph_(g), scc_of_(g.n(), -1) {
    build_initial();
}

std::vector<std::vector<int>> DecSccState::local_sccs(const std::vector<int>& verts) const {
    std::vector<char> mask(graph_.n(), 0);
    for (int v : verts) mask[v] = 1;
    return scc_groups(graph_, verts, mask);
}

// Kahn's algorithm over the given groups, smallest minimum-member first so
// the produced order is a deterministic function of the graph.
std::vector<int> DecSccState::topo_sort_children(const std::vector<std::vector<int>>& groups,
                                                 const std::vector<int>& verts) const {
    int k = int(groups.size());
    std::vector<int> group_of(graph_.n(), -1);
    for (int gi = 0; gi < k; ++gi)
        for (int v : groups[gi]) group_of[v] = gi;
    std::vector<std::set<int>> succ(k);
    std::vector<int> indeg(k, 0);
    for (int w : verts) {
        for (int y : graph_.out_edges(w)) {
            int a = group_of[w], b = group_of[y];
            if (b == -1 || a == b) continue;
            if (succ[a].insert(b).second) indeg[b]++;
        }
    }
    using Item = std::pair<int, int>;  // (min member, group index)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
    for (int gi = 0; gi < k; ++gi)
        if (indeg[gi] == 0) ready.push({groups[gi].front(), gi});
    std::vector<int> order;
    while (!ready.empty()) {
        auto [mm, gi] = ready.top();
        ready.pop();
        order.push_back(gi);
        for (int b : succ[gi]) {
            if (--indeg[b] == 0) ready.push({groups[b].front(), b});
        }
    }
    if (int(order.size()) != k) throw InternalInconsistency("child condensation has a cycle");
    return order;
}

void DecSccState::build_initial() {
    std::vector<int> all(graph_.n());
    for (int v = 0; v < graph_.n(); ++v) all[v] = v;
    std::vector<char> mask(graph_.n(), 1);
    auto groups = scc_groups(graph_, all, mask);
    auto order = topo_sort_children(groups, all);
    int offset = 0;
    for (int gi : order) {
        int id = next_id_++;
        members_[id] = groups[gi];
        label_[id] = offset;
        offset += int(groups[gi].size());
        for (int v : groups[gi]) scc_of_[v] = id;
    }
    for (auto [u, v] : graph_.edges()) {
        int a = scc_of_[u], b = scc_of_[v];
        if (a == b) continue;
        auto& bucket = cond_[{a, b}];
        bucket.insert({u, v});
        cond_out_[a].insert(b);
        cond_in_[b].insert(a);
    }
}

const std::vector<int>& DecSccState::members(int comp) const {
    auto it = members_.find(comp);
    if (it == members_.end()) throw UnknownComponent(comp);
    return it->second;
}

int DecSccState::label_of(int comp) const {
    auto it = label_.find(comp);
    if (it == label_.end()) throw UnknownComponent(comp);
    return it->second;
}

std::vector<int> DecSccState::component_ids() const {
    std::vector<int> ids;
    ids.reserve(members_.size());
    for (const auto& [id, m] : members_) ids.push_back(id);
    return ids;
}

std::vector<int> DecSccState::canonical_partition() const {
    std::vector<int> labels(graph_.n());
    for (const auto& [id, m] : members_) {
        for (int v : m) labels[v] = m.front();
    }
    return labels;
}

std::pair<int, int> DecSccState::representative_edge(int x, int y) const {
    auto it = cond_.find({x, y});
    if (it == cond_.end() || it->second.empty()) {
        throw InternalInconsistency("no condensation edge " + std::to_string(x) + "->" +
                                    std::to_string(y));
    }
    return *it->second.begin();
}

std::vector<int> DecSccState::cond_out(int x) const {
    auto it = cond_out_.find(x);
    if (it == cond_out_.end()) return {};
    return {it->second.begin(), it->second.end()};
}

std::vector<int> DecSccState::cond_in(int y) const {
    auto it = cond_in_.find(y);
    if (it == cond_in_.end()) return {};
    return {it->second.begin(), it->second.end()};
}

std::vector<DecSccState::Split> DecSccState::delete_edge(int u, int v) {
    graph_.delete_edge(u, v);
    int x = scc_of_[u], y = scc_of_[v];
    if (x != y) {
        auto it = cond_.find({x, y});
        it->second.erase({u, v});
        if (it->second.empty()) {
            cond_.erase(it);
            cond_out_[x].erase(y);
            cond_in_[y].erase(x);
        }
        return {};
    }
    std::vector<int> old_members = members_[x];
    auto groups = local_sccs(old_members);
    if (groups.size() == 1) return {};

    // Collect every underlying edge whose classification may change: all
    // current cross edges incident to x plus the surviving internal edges.
    std::vector<std::pair<int, int>> affected;
    for (int b : cond_out(x)) {
        for (auto e : cond_[{x, b}]) affected.push_back(e);
        cond_.erase({x, b});
        cond_in_[b].erase(x);
    }
    for (int a : cond_in(x)) {
        for (auto e : cond_[{a, x}]) affected.push_back(e);
        cond_.erase({a, x});
        cond_out_[a].erase(x);
    }
    cond_out_.erase(x);
    cond_in_.erase(x);
    for (int w : old_members) {
        for (int z : graph_.out_edges(w)) {
            if (scc_of_[z] == x) affected.push_back({w, z});
        }
    }

    // Largest child keeps the parent's id; ties go to the smaller minimum
    // member. Labels are packed into the parent's interval in the children's
    // topological order.
    auto order = topo_sort_children(groups, old_members);
    int retained_gi = order[0];
    for (int gi : order) {
        if (groups[gi].size() > groups[retained_gi].size() ||
            (groups[gi].size() == groups[retained_gi].size() &&
             groups[gi].front() < groups[retained_gi].front())) {
            retained_gi = gi;
        }
    }
    int parent_label = label_[x];
    int parent_size = int(old_members.size());
    members_.erase(x);
    label_.erase(x);
    Split split{x, {}};
    int offset = parent_label;
    for (int gi : order) {
        int id = (gi == retained_gi) ? x : next_id_++;
        split.children.push_back(id);
        members_[id] = groups[gi];
        label_[id] = offset;
        offset += int(groups[gi].size());
        for (int w : groups[gi]) scc_of_[w] = id;
    }
    if (offset != parent_label + parent_size) {
        throw InternalInconsistency("child intervals do not partition the parent interval");
    }

    for (auto [a, b] : affected) {
        int ca = scc_of_[a], cb = scc_of_[b];
        if (ca == cb) continue;
        cond_[{ca, cb}].insert({a, b});
        cond_out_[ca].insert(cb);
        cond_in_[cb].insert(ca);
    }
    ++version_;
    return {split};
}

PathWitness DecSccState::path_in_scc(int u, int v) const {
    graph_.check_vertex(u);
    graph_.check_vertex(v);
    if (scc_of_[u] != scc_of_[v]) throw NotStronglyConnected(u, v);
    if (u == v) return PathWitness::empty_at(u);
    int comp = scc_of_[u];
    std::vector<int> parent(graph_.n(), -1);
    std::queue<int> q;
    q.push(u);
    parent[u] = u;
    while (!q.empty()) {
        int w = q.front();
        q.pop();
        if (w == v) break;
        for (int z : graph_.out_edges(w)) {
            if (scc_of_[z] == comp && parent[z] == -1) {
                parent[z] = w;
                q.push(z);
            }
        }
    }
    if (parent[v] == -1) throw InternalInconsistency("strongly connected pair has no path");
    std::vector<int> vertices{v};
    while (vertices.back() != u) vertices.push_back(parent[vertices.back()]);
    std::reverse(vertices.begin(), vertices.end());
    double weight = 0;
    for (size_t i = 0; i + 1 < vertices.size(); ++i) weight += graph_.weight(vertices[i], vertices[i + 1]);
    return {vertices, weight};
}

std::vector<std::pair<int, int>> DecSccState::scc_subgraph(int comp) const {
    const auto& m = members(comp);
    std::set<std::pair<int, int>> edges;
    if (m.size() > 1) {
        int root = m.front();
        // Out-tree from the root.
        {
            std::vector<char> seen(graph_.n(), 0);
            std::queue<int> q;
            q.push(root);
            seen[root] = 1;
            while (!q.empty()) {
                int w = q.front();
                q.pop();
                for (int z : graph_.out_edges(w)) {
                    if (scc_of_[z] == comp && !seen[z]) {
                        seen[z] = 1;
                        edges.insert({w, z});
                        q.push(z);
                    }
                }
            }
        }
        // In-tree to the root: BFS over reversed edges.
        {
            std::vector<char> seen(graph_.n(), 0);
            std::queue<int> q;
            q.push(root);
            seen[root] = 1;
            while (!q.empty()) {
                int w = q.front();
                q.pop();
                for (int z : graph_.in_edges(w)) {
                    if (scc_of_[z] == comp && !seen[z]) {
                        seen[z] = 1;
                        edges.insert({z, w});
                        q.push(z);
                    }
                }
            }
        }
    }
    return {edges.begin(), edges.end()};
}

void DecSccState::check_invariants() const {
    int n = graph_.n();
    // Intervals partition [0, n).
    std::vector<std::pair<int, int>> intervals;  // (label, comp id)
    for (const auto& [id, lbl] : label_) intervals.push_back({lbl, id});
    std::sort(intervals.begin(), intervals.end());
    int offset = 0;
    for (auto [lbl, id] : intervals) {
        if (lbl != offset) throw InternalInconsistency("label intervals do not partition [0,n)");
        offset += size_of(id);
    }
    if (offset != n) throw InternalInconsistency("label intervals do not cover [0,n)");
    // Membership is mutually consistent.
    for (const auto& [id, mem] : members_) {
        for (int v : mem) {
            if (scc_of_[v] != id) throw InternalInconsistency("member map disagrees with scc_of");
        }
    }
    for (int v = 0; v < n; ++v) {
        if (!members_.count(scc_of_[v])) throw InternalInconsistency("vertex in a dead component");
    }
    // Condensation edges respect labels, carry live current edges, and cover
    // every cross-component edge.
    size_t tracked = 0;
    for (const auto& [pair_key, bucket] : cond_) {
        auto [a, b] = pair_key;
        if (label_.at(a) >= label_.at(b)) {
            throw InternalInconsistency("condensation edge violates label order");
        }
        if (bucket.empty()) throw InternalInconsistency("empty condensation bucket");
        for (auto [eu, ev] : bucket) {
            if (!graph_.has_edge(eu, ev) || scc_of_[eu] != a || scc_of_[ev] != b) {
                throw InternalInconsistency("stale condensation edge");
            }
        }
        tracked += bucket.size();
        if (!cond_out_.count(a) || !cond_out_.at(a).count(b) || !cond_in_.count(b) ||
            !cond_in_.at(b).count(a)) {
            throw InternalInconsistency("condensation adjacency out of sync");
        }
    }
    size_t cross = 0;
    for (auto [u, v] : graph_.edges()) {
        if (scc_of_[u] != scc_of_[v]) ++cross;
    }
    if (cross != tracked) throw InternalInconsistency("condensation misses cross edges");
}

}  // namespace dygraph
