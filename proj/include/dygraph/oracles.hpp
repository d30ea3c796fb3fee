// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "dygraph/graph.hpp"

// Exact brute-force ground truth. Everything here is slow and obviously
// correct; tests and the CLI `--check` mode trust nothing else.

namespace dygraph {

// True iff a directed s->t path exists (BFS). reach(s,s) is always true.
bool oracle_reach(const DiGraph& g, int s, int t);

// Set of vertices reachable from s, including s, as a boolean mask.
std::vector<char> oracle_reach_set(const DiGraph& g, int s);

// Strongly connected components, canonicalized: every vertex is labeled by
// the minimum vertex id of its component.
std::vector<int> oracle_scc(const DiGraph& g);

// Same canonical labeling for a raw adjacency structure (parallel edges and
// self-loops tolerated).
std::vector<int> scc_labels(const std::vector<std::vector<int>>& adj);

// All-pairs boolean closure by Floyd-Warshall; closure[u][v] iff u reaches v.
std::vector<std::vector<char>> oracle_closure(const DiGraph& g);

// Exact single-source distances (BFS if unweighted, Dijkstra otherwise)
// plus a parent vector; dist = kInf and parent = -1 where unreachable.
struct DistResult {
    std::vector<double> dist;
    std::vector<int> parent;
};
DistResult oracle_dist(const DiGraph& g, int s);

// All-pairs distances by Floyd-Warshall.
std::vector<std::vector<double>> oracle_apsp(const DiGraph& g);

// Validates a reported path: starts at s, ends at t, every hop is a current
// edge, the weight sum matches, and no vertex repeats when required.
bool verify_path(const DiGraph& g, const PathWitness& w, int s, int t, bool require_simple);

// Validates a reported tree: `edges` must form an out-tree rooted at s whose
// vertex set is exactly `expected`, with every edge present in g.
bool verify_out_tree(const DiGraph& g, const std::vector<std::pair<int, int>>& edges, int s,
                     const std::vector<char>& expected);

}  // namespace dygraph
