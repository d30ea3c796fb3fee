// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>

#include "doctest.h"
#include "dygraph/catpath.hpp"

using namespace dygraph;

namespace {

// Balance validator: every internal node must satisfy the AVL condition.
bool balanced(const CatPath& p) {
    bool ok = true;
    // Reconstruct heights from iteration is impossible from outside; rely on
    // the height bound instead: an AVL tree with k leaves has height
    // <= 1.45 * log2(k) + 2.
    if (p.hops() > 0) {
        double bound = 1.45 * std::log2(double(p.hops())) + 2.0;
        ok = double(p.height()) <= bound;
    }
    return ok;
}

}  // namespace

TEST_CASE("empty and singleton") {
    CatPath e = CatPath::empty_at(3);
    CHECK(e.is_empty());
    CHECK(e.tail() == 3);
    CHECK(e.head() == 3);
    CHECK(e.hops() == 0);
    CHECK(e.weight() == 0.0);
    CHECK(e.vertices() == std::vector<int>{3});

    CatPath s = CatPath::singleton(1, 2, 3.5);
    CHECK(s.hops() == 1);
    CHECK(s.weight() == 3.5);
    CHECK(s.vertices() == std::vector<int>{1, 2});
}

TEST_CASE("concat identities and endpoint checks") {
    CatPath p = CatPath::singleton(0, 1, 1.0);
    CHECK(CatPath::concat(CatPath::empty_at(0), p).vertices() == p.vertices());
    CHECK(CatPath::concat(p, CatPath::empty_at(1)).vertices() == p.vertices());
    CHECK_THROWS_AS(CatPath::concat(p, CatPath::singleton(2, 3, 1.0)), EndpointMismatch);
    CHECK_THROWS_AS(CatPath::concat(CatPath::empty_at(5), p), EndpointMismatch);
}

TEST_CASE("iteration order equals concatenation order") {
    CatPath a = CatPath::concat(CatPath::singleton(0, 1, 1.0), CatPath::singleton(1, 2, 2.0));
    CatPath b = CatPath::concat(CatPath::singleton(2, 3, 1.0), CatPath::singleton(3, 4, 1.0));
    CatPath ab = CatPath::concat(a, b);
    CHECK(ab.vertices() == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(ab.weight() == 5.0);
    CHECK(ab.hops() == 4);
    // Operands untouched.
    CHECK(a.vertices() == std::vector<int>{0, 1, 2});
    CHECK(b.vertices() == std::vector<int>{2, 3, 4});
}

TEST_CASE("10^4 random concats: caches match recomputation, trees stay shallow") {
    std::mt19937_64 rng(7);
    // Build a pool of paths over a line of vertices; concatenating paths
    // with matching endpoints keeps everything valid.
    std::vector<CatPath> pool;
    for (int v = 0; v < 50; ++v) pool.push_back(CatPath::singleton(v, v + 1, 1.0 + (v % 5)));
    for (int round = 0; round < 10000; ++round) {
        // Pick a path ending where another begins.
        const CatPath& a = pool[rng() % pool.size()];
        std::vector<const CatPath*> fits;
        for (const auto& b : pool) {
            if (b.tail() == a.head()) fits.push_back(&b);
        }
        if (fits.empty()) continue;
        const CatPath& b = *fits[rng() % fits.size()];
        CatPath joined = CatPath::concat(a, b);
        double weight = 0.0;
        int hops = 0;
        int expect_vertex = joined.tail();
        bool contiguous = true;
        joined.for_each_edge([&](int u, int v, double w) {
            if (u != expect_vertex) contiguous = false;
            expect_vertex = v;
            weight += w;
            ++hops;
        });
        CHECK(contiguous);
        CHECK(weight == doctest::Approx(joined.weight()).epsilon(1e-12));
        CHECK(hops == joined.hops());
        CHECK(balanced(joined));
        if (joined.hops() < 100000) pool.push_back(joined);
        if (pool.size() > 400) pool.erase(pool.begin(), pool.begin() + 200);
    }
}

TEST_CASE("long skewed concatenation stays iterable") {
    // Worst case for balance: repeatedly appending single edges.
    CatPath p = CatPath::empty_at(0);
    int k = 200000;
    for (int i = 0; i < k; ++i) {
        p = CatPath::concat(p, CatPath::singleton(i, i + 1, 1.0));
    }
    CHECK(p.hops() == k);
    CHECK(double(p.height()) <= 1.45 * std::log2(double(k)) + 2.0);
    int count = 0;
    p.for_each_edge([&](int u, int, double) {
        CHECK(u == count);
        ++count;
    });
    CHECK(count == k);
}
