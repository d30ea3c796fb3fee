// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "dygraph/errors.hpp"

namespace dygraph {

// Arithmetic in Z/pZ for a runtime prime p. The default is the Mersenne
// prime 2^61 - 1; tests override p with tiny primes to force collisions.
inline constexpr uint64_t kDefaultPrime = (uint64_t(1) << 61) - 1;

class Field {
  public:
    explicit Field(uint64_t p = kDefaultPrime) : p_(p) {}

    uint64_t p() const { return p_; }

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    // p is prime, so a^(p-2) inverts a.
    uint64_t inv(uint64_t a) const {
        if (a == 0) throw Singular();
        return pow(a, p_ - 2);
    }

  private:
    uint64_t p_;
};

// Dense row-major matrix over Z/pZ.
class FieldMatrix {
  public:
    FieldMatrix() : rows_(0), cols_(0) {}
    FieldMatrix(int rows, int cols, Field f = Field())
        : rows_(rows), cols_(cols), field_(f), data_(size_t(rows) * cols, 0) {}

    static FieldMatrix identity(int n, Field f = Field()) {
        FieldMatrix m(n, n, f);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    uint64_t& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    uint64_t at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    bool operator==(const FieldMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    FieldMatrix multiply(const FieldMatrix& other) const;
    bool is_identity() const;

  private:
    int rows_, cols_;
    Field field_;
    std::vector<uint64_t> data_;
};

// Gauss-Jordan inversion; throws Singular so the caller can re-randomize.
FieldMatrix invert(const FieldMatrix& m);

// Given Ninv = M^-1, returns (M + delta * e_i e_j^T)^-1 by Sherman-Morrison
// in O(n^2) field operations. Throws Singular when 1 + delta * Ninv[j][i] = 0.
FieldMatrix rank1_update(const FieldMatrix& ninv, int i, int j, uint64_t delta);

// In-place variant used by the hot engine paths.
void rank1_update_inplace(FieldMatrix& ninv, int i, int j, uint64_t delta);

}  // namespace dygraph
