// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dygraph/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace dygraph {

bool oracle_reach(const DiGraph& g, int s, int t) {
    g.check_vertex(s);
    g.check_vertex(t);
    if (s == t) return true;
    return oracle_reach_set(g, s)[t] != 0;
}

std::vector<char> oracle_reach_set(const DiGraph& g, int s) {
    g.check_vertex(s);
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.out_edges(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
        }
    }
    return seen;
}

namespace {

// Iterative Tarjan; recursion depth would be a liability on long chains.
struct TarjanState {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> index, low, comp, stack;
    std::vector<char> on_stack;
    int next_index = 0, next_comp = 0;

    explicit TarjanState(const std::vector<std::vector<int>>& adj)
        : adj(adj), index(adj.size(), -1), low(adj.size(), 0), comp(adj.size(), -1),
          on_stack(adj.size(), 0) {}

    void run(int root) {
        struct Frame {
            int v;
            size_t edge;
        };
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& out = adj[f.v];
            if (f.edge < out.size()) {
                int w = out[f.edge++];
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
};

}  // namespace

std::vector<int> scc_labels(const std::vector<std::vector<int>>& adj) {
    int n = int(adj.size());
    TarjanState t(adj);
    for (int v = 0; v < n; ++v) {
        if (t.index[v] == -1) t.run(v);
    }
    // Canonicalize: label each class by its minimum member.
    std::vector<int> min_member(t.next_comp, n);
    for (int v = 0; v < n; ++v) min_member[t.comp[v]] = std::min(min_member[t.comp[v]], v);
    std::vector<int> label(n);
    for (int v = 0; v < n; ++v) label[v] = min_member[t.comp[v]];
    return label;
}

std::vector<int> oracle_scc(const DiGraph& g) {
    std::vector<std::vector<int>> adj(g.n());
    for (int v = 0; v < g.n(); ++v) adj[v] = g.out_edges(v);
    return scc_labels(adj);
}

std::vector<std::vector<char>> oracle_closure(const DiGraph& g) {
    int n = g.n();
    std::vector<std::vector<char>> c(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v) {
        c[v][v] = 1;
        for (int w : g.out_edges(v)) c[v][w] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (c[i][k])
                for (int j = 0; j < n; ++j)
                    if (c[k][j]) c[i][j] = 1;
    return c;
}

DistResult oracle_dist(const DiGraph& g, int s) {
    g.check_vertex(s);
    int n = g.n();
    DistResult r{std::vector<double>(n, kInf), std::vector<int>(n, -1)};
    r.dist[s] = 0.0;
    if (!g.weighted()) {
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.out_edges(u)) {
                if (r.dist[v] == kInf) {
                    r.dist[v] = r.dist[u] + 1.0;
                    r.parent[v] = u;
                    q.push(v);
                }
            }
        }
        return r;
    }
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0.0, s});
    std::vector<char> done(n, 0);
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (done[u]) continue;
        done[u] = 1;
        for (int v : g.out_edges(u)) {
            double nd = d + g.weight(u, v);
            if (nd < r.dist[v]) {
                r.dist[v] = nd;
                r.parent[v] = u;
                pq.push({nd, v});
            }
        }
    }
    return r;
}

std::vector<std::vector<double>> oracle_apsp(const DiGraph& g) {
    int n = g.n();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
    for (int v = 0; v < n; ++v) {
        d[v][v] = 0.0;
        for (int w : g.out_edges(v)) d[v][w] = g.weight(v, w);
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

bool verify_path(const DiGraph& g, const PathWitness& w, int s, int t, bool require_simple) {
    if (w.vertices.empty()) return false;
    if (w.source() != s || w.target() != t) return false;
    double sum = 0.0;
    for (size_t i = 0; i + 1 < w.vertices.size(); ++i) {
        int a = w.vertices[i], b = w.vertices[i + 1];
        if (a < 0 || a >= g.n() || b < 0 || b >= g.n() || !g.has_edge(a, b)) return false;
        sum += g.weight(a, b);
    }
    double scale = std::max({1.0, std::abs(sum), std::abs(w.total_weight)});
    if (std::abs(sum - w.total_weight) > 1e-9 * scale) return false;
    if (require_simple) {
        std::vector<int> vs = w.vertices;
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
    }
    return true;
}

bool verify_out_tree(const DiGraph& g, const std::vector<std::pair<int, int>>& edges, int s,
                     const std::vector<char>& expected) {
    int n = g.n();
    if (s < 0 || s >= n) return false;
    if (static_cast<int>(expected.size()) != n || !expected[s]) return false;
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n || !g.has_edge(u, v)) return false;
        indeg[v]++;
        adj[u].push_back(v);
    }
    std::vector<char> in_tree(n, 0);
    in_tree[s] = 1;
    for (auto [u, v] : edges) in_tree[u] = in_tree[v] = 1;
    if (indeg[s] != 0) return false;
    for (int v = 0; v < n; ++v) {
        if (in_tree[v] && v != s && indeg[v] != 1) return false;
    }
    // Every tree vertex must be reachable from s within the tree edges.
    std::vector<char> seen(n, 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (in_tree[v] && !seen[v]) return false;
        if (seen[v] != (expected[v] ? 1 : 0)) return false;
    }
    return true;
}

}  // namespace dygraph
