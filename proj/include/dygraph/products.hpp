// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dygraph/errors.hpp"
#include "dygraph/graph.hpp"

namespace dygraph {

// Dense boolean matrix.
class BoolMatrix {
  public:
    BoolMatrix() : rows_(0), cols_(0) {}
    BoolMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, 0) {}

    static BoolMatrix identity(int n) {
        BoolMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const { return data_[size_t(r) * cols_ + c] != 0; }
    void set(int r, int c, bool v) { data_[size_t(r) * cols_ + c] = v ? 1 : 0; }
    bool operator==(const BoolMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    int rows_, cols_;
    std::vector<uint8_t> data_;
};

// Dense matrix of path lengths. Finite entries are nonnegative reals;
// kInf is the reserved "no path" sentinel and arithmetic saturates on it.
class WeightMatrix {
  public:
    WeightMatrix() : rows_(0), cols_(0) {}
    WeightMatrix(int rows, int cols, double fill = kInf)
        : rows_(rows), cols_(cols), data_(size_t(rows) * cols, fill) {}

    // Min-plus identity: zero diagonal, kInf off-diagonal.
    static WeightMatrix minplus_identity(int n) {
        WeightMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 0.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    double at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }
    bool operator==(const WeightMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    int rows_, cols_;
    std::vector<double> data_;
};

// Inner index realizing each product entry; -1 encodes "no witness".
class WitnessMatrix {
  public:
    WitnessMatrix() : rows_(0), cols_(0) {}
    WitnessMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, -1) {}

    static constexpr int kNone = -1;

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    int at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

  private:
    int rows_, cols_;
    std::vector<int> data_;
};

// C[i][j] = OR_k A[i][k] AND B[k][j]; witness = the smallest such k.
std::pair<BoolMatrix, WitnessMatrix> bool_product_witness(const BoolMatrix& a,
                                                          const BoolMatrix& b);

// Witness-free boolean product, for repeated squaring.
BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b);

// Bounded min-plus product of integer matrices: D[i][j] = min_k A[i][k]+B[k][j]
// when that min is <= h, else kInf. Finite inputs must be integers in [0, h].
// Witness = the smallest minimizing k.
std::pair<WeightMatrix, WitnessMatrix> minplus_bounded(const WeightMatrix& a,
                                                       const WeightMatrix& b, int64_t h);

// Approximate min-plus product with the exact-witness contract:
//   min_k(A[i][k]+B[k][j]) <= D[i][j] = A[i][w]+B[w][j] <= (1+eps) * min_k(...).
// Finite inputs must be 0 or >= 1; eps in (0, 1]. Dyadic scaling: for every
// scale r = 2^t up to twice the largest finite entry, entries <= r are rounded
// up to multiples of eps*r/4 and an integer min-plus is run; the elementwise
// best realized sum is kept.
std::pair<WeightMatrix, WitnessMatrix> minplus_approx(const WeightMatrix& a,
                                                      const WeightMatrix& b, double eps);

// Exact min-plus without a bound, for test oracles.
std::pair<WeightMatrix, WitnessMatrix> minplus_exact(const WeightMatrix& a,
                                                     const WeightMatrix& b);

// Greedy hitting set: every input path is a vertex list with the same hop
// length h (h+1 >= 2 vertices). Repeatedly takes the vertex covering the most
// unhit paths (ties -> smaller id) until all paths are hit. The returned set
// satisfies |B| <= (n/h) * (1 + ln(#paths)), asserted internally.
std::vector<int> greedy_hitting_set(const std::vector<std::vector<int>>& paths, int n);

}  // namespace dygraph
