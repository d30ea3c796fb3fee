// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dygraph/field.hpp"

namespace dygraph {

FieldMatrix FieldMatrix::multiply(const FieldMatrix& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("matrix product dimensions disagree");
    FieldMatrix out(rows_, other.cols_, field_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            uint64_t a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < other.cols_; ++j) {
                out.at(i, j) = field_.add(out.at(i, j), field_.mul(a, other.at(k, j)));
            }
        }
    }
    return out;
}

bool FieldMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

FieldMatrix invert(const FieldMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("only square matrices invert");
    int n = m.rows();
    const Field& f = m.field();
    FieldMatrix a = m;
    FieldMatrix inv = FieldMatrix::identity(n, f);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == -1) throw Singular();
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        uint64_t piv_inv = f.inv(a.at(col, col));
        for (int j = 0; j < n; ++j) {
            a.at(col, j) = f.mul(a.at(col, j), piv_inv);
            inv.at(col, j) = f.mul(inv.at(col, j), piv_inv);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            uint64_t factor = a.at(r, col);
            if (factor == 0) continue;
            for (int j = 0; j < n; ++j) {
                a.at(r, j) = f.sub(a.at(r, j), f.mul(factor, a.at(col, j)));
                inv.at(r, j) = f.sub(inv.at(r, j), f.mul(factor, inv.at(col, j)));
            }
        }
    }
    return inv;
}

void rank1_update_inplace(FieldMatrix& ninv, int i, int j, uint64_t delta) {
    if (ninv.rows() != ninv.cols()) throw DimensionMismatch("rank1_update needs a square inverse");
    int n = ninv.rows();
    const Field& f = ninv.field();
    delta %= f.p();
    if (delta == 0) return;
    // (M + d e_i e_j^T)^-1 = Ninv - (d / (1 + d*Ninv[j,i])) * Ninv[:,i] * Ninv[j,:]
    uint64_t denom = f.add(1, f.mul(delta, ninv.at(j, i)));
    if (denom == 0) throw Singular();
    uint64_t scale = f.mul(delta, f.inv(denom));
    std::vector<uint64_t> col(n), row(n);
    for (int r = 0; r < n; ++r) col[r] = ninv.at(r, i);
    for (int c = 0; c < n; ++c) row[c] = ninv.at(j, c);
    for (int r = 0; r < n; ++r) {
        if (col[r] == 0) continue;
        uint64_t factor = f.mul(scale, col[r]);
        for (int c = 0; c < n; ++c) {
            ninv.at(r, c) = f.sub(ninv.at(r, c), f.mul(factor, row[c]));
        }
    }
}

FieldMatrix rank1_update(const FieldMatrix& ninv, int i, int j, uint64_t delta) {
    FieldMatrix out = ninv;
    rank1_update_inplace(out, i, j, delta);
    return out;
}

}  // namespace dygraph
