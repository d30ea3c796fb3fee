// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "doctest.h"
#include "dygraph/products.hpp"

using namespace dygraph;

namespace {

BoolMatrix random_bool(int r, int c, std::mt19937_64& rng, int density_pct = 40) {
    BoolMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, int(rng() % 100) < density_pct);
    return m;
}

WeightMatrix random_int_matrix(int r, int c, int64_t lo, int64_t hi, std::mt19937_64& rng,
                               int inf_pct = 20) {
    WeightMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) {
            if (int(rng() % 100) < inf_pct) continue;
            m.at(i, j) = double(lo + int64_t(rng() % uint64_t(hi - lo + 1)));
        }
    }
    return m;
}

WeightMatrix random_real_matrix(int r, int c, double cap, std::mt19937_64& rng,
                                int inf_pct = 20) {
    WeightMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) {
            if (int(rng() % 100) < inf_pct) continue;
            m.at(i, j) = 1.0 + double(rng() % 100000) / 100000.0 * (cap - 1.0);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("bool product with identity and all-false") {
    std::mt19937_64 rng(1);
    BoolMatrix b = random_bool(5, 7, rng);
    auto [c, w] = bool_product_witness(BoolMatrix::identity(5), b);
    CHECK(c == b);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 7; ++j)
            if (b.get(i, j)) CHECK(w.at(i, j) == i);

    BoolMatrix z(4, 4);
    auto [cz, wz] = bool_product_witness(z, random_bool(4, 4, rng));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK_FALSE(cz.get(i, j));
            CHECK(wz.at(i, j) == WitnessMatrix::kNone);
        }
}

TEST_CASE("bool product matches triple loop, witnesses valid and minimal") {
    std::mt19937_64 rng(2);
    for (int round = 0; round < 50; ++round) {
        BoolMatrix a = random_bool(12, 5, rng);
        BoolMatrix b = random_bool(5, 12, rng);
        auto [c, w] = bool_product_witness(a, b);
        for (int i = 0; i < 12; ++i) {
            for (int j = 0; j < 12; ++j) {
                bool expect = false;
                int first = WitnessMatrix::kNone;
                for (int k = 0; k < 5; ++k) {
                    if (a.get(i, k) && b.get(k, j)) {
                        expect = true;
                        first = k;
                        break;
                    }
                }
                CHECK(c.get(i, j) == expect);
                CHECK(w.at(i, j) == first);
            }
        }
    }
}

TEST_CASE("minplus_bounded identity clip and threshold") {
    std::mt19937_64 rng(3);
    int64_t h = 7;
    WeightMatrix a = random_int_matrix(6, 6, 0, h, rng);
    auto [d, w] = minplus_bounded(a, WeightMatrix::minplus_identity(6), h);
    CHECK(d == a);

    WeightMatrix x(1, 1), y(1, 1);
    x.at(0, 0) = double(h);
    y.at(0, 0) = 1.0;
    auto [clip, wc] = minplus_bounded(x, y, h);
    CHECK(clip.at(0, 0) == kInf);
    CHECK(wc.at(0, 0) == WitnessMatrix::kNone);
}

TEST_CASE("minplus_bounded matches unclipped oracle and is monotone in h") {
    std::mt19937_64 rng(4);
    for (int round = 0; round < 50; ++round) {
        WeightMatrix a = random_int_matrix(10, 10, 0, 7, rng);
        WeightMatrix b = random_int_matrix(10, 10, 0, 7, rng);
        auto [exact, we] = minplus_exact(a, b);
        auto [d7, w7] = minplus_bounded(a, b, 7);
        auto [d14, w14] = minplus_bounded(a, b, 14);
        for (int i = 0; i < 10; ++i) {
            for (int j = 0; j < 10; ++j) {
                if (exact.at(i, j) <= 7.0) {
                    CHECK(d7.at(i, j) == exact.at(i, j));
                    int k = w7.at(i, j);
                    CHECK(a.at(i, k) + b.at(k, j) == d7.at(i, j));
                    CHECK(w7.at(i, j) == we.at(i, j));  // smallest minimizer
                } else {
                    CHECK(d7.at(i, j) == kInf);
                }
                // Raising h never worsens an entry.
                CHECK(d14.at(i, j) <= d7.at(i, j));
            }
        }
    }
}

TEST_CASE("minplus_bounded rejects non-integer and out-of-range entries") {
    WeightMatrix a(1, 1), b(1, 1);
    a.at(0, 0) = 1.5;
    b.at(0, 0) = 1.0;
    CHECK_THROWS_AS(minplus_bounded(a, b, 7), EntryOutOfRange);
    a.at(0, 0) = 9.0;
    CHECK_THROWS_AS(minplus_bounded(a, b, 7), EntryOutOfRange);
}

TEST_CASE("minplus_approx single entry and identity") {
    WeightMatrix a(1, 1);
    a.at(0, 0) = 1.0;
    auto [d, w] = minplus_approx(a, a, 0.5);
    CHECK(d.at(0, 0) == 2.0);
    CHECK(w.at(0, 0) == 0);

    std::mt19937_64 rng(5);
    WeightMatrix m = random_real_matrix(6, 6, 16.0, rng);
    auto [di, wi] = minplus_approx(m, WeightMatrix::minplus_identity(6), 0.25);
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            if (m.at(i, j) == kInf) {
                CHECK(di.at(i, j) == kInf);
            } else {
                CHECK(di.at(i, j) >= m.at(i, j));
                CHECK(di.at(i, j) <= (1.0 + 0.25) * m.at(i, j) * (1 + 1e-9));
            }
        }
    }
    CHECK_THROWS_AS(minplus_approx(m, m, 0.0), BadEpsilon);
    CHECK_THROWS_AS(minplus_approx(m, m, 1.5), BadEpsilon);
}

TEST_CASE("minplus_approx sandwich across eps values") {
    std::mt19937_64 rng(6);
    for (double eps : {1.0, 0.5, 0.1, 0.01}) {
        for (int round = 0; round < 50; ++round) {
            WeightMatrix a = random_real_matrix(8, 8, 16.0, rng);
            WeightMatrix b = random_real_matrix(8, 8, 16.0, rng);
            auto [exact, we] = minplus_exact(a, b);
            auto [d, w] = minplus_approx(a, b, eps);
            for (int i = 0; i < 8; ++i) {
                for (int j = 0; j < 8; ++j) {
                    if (exact.at(i, j) == kInf) {
                        CHECK(d.at(i, j) == kInf);
                        continue;
                    }
                    CHECK(d.at(i, j) >= exact.at(i, j) * (1 - 1e-12));
                    CHECK(d.at(i, j) <= (1.0 + eps) * exact.at(i, j) * (1 + 1e-9));
                    int k = w.at(i, j);
                    CHECK(k != WitnessMatrix::kNone);
                    CHECK(d.at(i, j) == a.at(i, k) + b.at(k, j));
                }
            }
        }
    }
}

TEST_CASE("minplus_approx handles zero diagonals") {
    // Distance-matrix style input: zero diagonal, finite entries >= 1.
    std::mt19937_64 rng(7);
    WeightMatrix a = random_real_matrix(6, 6, 8.0, rng);
    for (int i = 0; i < 6; ++i) a.at(i, i) = 0.0;
    auto [exact, we] = minplus_exact(a, a);
    auto [d, w] = minplus_approx(a, a, 0.1);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            if (exact.at(i, j) == kInf) {
                CHECK(d.at(i, j) == kInf);
            } else {
                CHECK(d.at(i, j) >= exact.at(i, j) * (1 - 1e-12));
                CHECK(d.at(i, j) <= 1.1 * exact.at(i, j) * (1 + 1e-9));
            }
        }
}

TEST_CASE("greedy_hitting_set basics") {
    CHECK(greedy_hitting_set({}, 10).empty());

    std::vector<std::vector<int>> shared = {{1, 5, 2}, {3, 5, 4}, {6, 5, 7}};
    CHECK(greedy_hitting_set(shared, 10) == std::vector<int>{5});
}

TEST_CASE("greedy_hitting_set hits everything within the bound") {
    std::mt19937_64 rng(8);
    int n = 40, h = 6;
    std::vector<std::vector<int>> paths;
    for (int p = 0; p < 50; ++p) {
        std::vector<int> path;
        std::vector<char> used(n, 0);
        while (int(path.size()) < h + 1) {
            int v = int(rng() % n);
            if (!used[v]) {
                used[v] = 1;
                path.push_back(v);
            }
        }
        paths.push_back(path);
    }
    auto b = greedy_hitting_set(paths, n);
    for (const auto& path : paths) {
        bool hit = false;
        for (int v : path)
            for (int x : b)
                if (v == x) hit = true;
        CHECK(hit);
    }
    double bound = (double(n) / h) * (1.0 + std::log(double(paths.size())));
    CHECK(double(b.size()) <= bound);
}
