// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "doctest.h"
#include "dygraph/field.hpp"

using namespace dygraph;

namespace {

FieldMatrix random_matrix(int n, std::mt19937_64& rng, const Field& f) {
    FieldMatrix m(n, n, f);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = rng() % f.p();
    return m;
}

}  // namespace

TEST_CASE("field basics") {
    Field f;
    CHECK(f.p() == kDefaultPrime);
    CHECK(f.mul(f.p() - 1, f.p() - 1) == 1);  // (-1)^2
    for (uint64_t a : {uint64_t(1), uint64_t(2), uint64_t(123456789), kDefaultPrime - 2}) {
        CHECK(f.mul(a, f.inv(a)) == 1);
    }
    CHECK_THROWS_AS(f.inv(0), Singular);
}

TEST_CASE("invert identity and unitriangular") {
    FieldMatrix i3 = FieldMatrix::identity(3);
    CHECK(invert(i3) == i3);

    Field f;
    uint64_t x = 123456;
    FieldMatrix m(2, 2, f);
    m.at(0, 0) = 1;
    m.at(0, 1) = x;
    m.at(1, 1) = 1;
    FieldMatrix inv = invert(m);
    CHECK(inv.at(0, 0) == 1);
    CHECK(inv.at(0, 1) == f.neg(x));
    CHECK(inv.at(1, 1) == 1);
}

TEST_CASE("invert multiplies back to identity") {
    std::mt19937_64 rng(42);
    Field f;
    for (int round = 0; round < 10; ++round) {
        FieldMatrix m = random_matrix(8, rng, f);
        FieldMatrix inv;
        try {
            inv = invert(m);
        } catch (const Singular&) {
            continue;  // vanishing chance with a 61-bit prime
        }
        CHECK(m.multiply(inv).is_identity());
        CHECK(inv.multiply(m).is_identity());
    }
}

TEST_CASE("singular matrix detected") {
    FieldMatrix z(3, 3);
    CHECK_THROWS_AS(invert(z), Singular);
}

TEST_CASE("rank1_update trivial cases") {
    std::mt19937_64 rng(1);
    Field f;
    FieldMatrix m = random_matrix(6, rng, f);
    FieldMatrix inv = invert(m);
    CHECK(rank1_update(inv, 2, 3, 0) == inv);

    uint64_t delta = rng() % (f.p() - 1) + 1;
    FieldMatrix up = rank1_update(inv, 1, 4, delta);
    FieldMatrix back = rank1_update(up, 1, 4, f.neg(delta));
    CHECK(back == inv);
}

TEST_CASE("rank1_update equals re-inversion on 500 random pairs") {
    std::mt19937_64 rng(2024);
    Field f;
    int checked = 0;
    while (checked < 500) {
        int n = 2 + int(rng() % 15);
        FieldMatrix m = random_matrix(n, rng, f);
        FieldMatrix inv;
        try {
            inv = invert(m);
        } catch (const Singular&) {
            continue;
        }
        int i = int(rng() % n), j = int(rng() % n);
        uint64_t delta = rng() % f.p();
        FieldMatrix updated = m;
        updated.at(i, j) = f.add(updated.at(i, j), delta);
        FieldMatrix direct;
        bool direct_singular = false;
        try {
            direct = invert(updated);
        } catch (const Singular&) {
            direct_singular = true;
        }
        try {
            FieldMatrix fast = rank1_update(inv, i, j, delta);
            CHECK_FALSE(direct_singular);
            CHECK(fast == direct);
        } catch (const Singular&) {
            CHECK(direct_singular);
        }
        ++checked;
    }
}

TEST_CASE("rank1_update detects the singular denominator") {
    // With M = I and delta = -1 at (0,0), M + delta*e0e0^T is singular.
    Field f;
    FieldMatrix inv = FieldMatrix::identity(3, f);
    CHECK_THROWS_AS(rank1_update(inv, 0, 0, f.neg(1)), Singular);
}
