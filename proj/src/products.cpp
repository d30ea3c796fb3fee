// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dygraph/products.hpp"

#include <cassert>
#include <cmath>
#include <cstdint>

namespace dygraph {

std::pair<BoolMatrix, WitnessMatrix> bool_product_witness(const BoolMatrix& a,
                                                          const BoolMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("bool product dimensions disagree");
    BoolMatrix c(a.rows(), b.cols());
    WitnessMatrix w(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < b.cols(); ++j) {
            for (int k = 0; k < a.cols(); ++k) {
                if (a.get(i, k) && b.get(k, j)) {
                    c.set(i, j, true);
                    w.at(i, j) = k;
                    break;
                }
            }
        }
    }
    return {c, w};
}

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("bool product dimensions disagree");
    BoolMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            if (!a.get(i, k)) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b.get(k, j)) c.set(i, j, true);
            }
        }
    }
    return c;
}

namespace {

int64_t checked_int_entry(double v, int64_t h, const char* side) {
    if (v == kInf) return -1;
    double r = std::nearbyint(v);
    if (r != v || v < 0 || v > double(h)) {
        throw EntryOutOfRange(std::string(side) + " entry " + std::to_string(v) +
                              " is not an integer in [0," + std::to_string(h) + "]");
    }
    return int64_t(r);
}

}  // namespace

std::pair<WeightMatrix, WitnessMatrix> minplus_bounded(const WeightMatrix& a,
                                                       const WeightMatrix& b, int64_t h) {
    if (a.cols() != b.rows()) throw DimensionMismatch("min-plus dimensions disagree");
    int n = a.rows(), m = a.cols(), p = b.cols();
    std::vector<int64_t> ai(size_t(n) * m), bi(size_t(m) * p);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < m; ++k) ai[size_t(i) * m + k] = checked_int_entry(a.at(i, k), h, "A");
    for (int k = 0; k < m; ++k)
        for (int j = 0; j < p; ++j) bi[size_t(k) * p + j] = checked_int_entry(b.at(k, j), h, "B");
    WeightMatrix d(n, p);
    WitnessMatrix w(n, p);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < p; ++j) {
            int64_t best = -1;
            int arg = WitnessMatrix::kNone;
            for (int k = 0; k < m; ++k) {
                int64_t x = ai[size_t(i) * m + k], y = bi[size_t(k) * p + j];
                if (x < 0 || y < 0) continue;
                int64_t s = x + y;
                if (best < 0 || s < best) {
                    best = s;
                    arg = k;
                }
            }
            if (best >= 0 && best <= h) {
                d.at(i, j) = double(best);
                w.at(i, j) = arg;
            }
        }
    }
    return {d, w};
}

std::pair<WeightMatrix, WitnessMatrix> minplus_exact(const WeightMatrix& a,
                                                     const WeightMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("min-plus dimensions disagree");
    WeightMatrix d(a.rows(), b.cols());
    WitnessMatrix w(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < b.cols(); ++j) {
            double best = kInf;
            int arg = WitnessMatrix::kNone;
            for (int k = 0; k < a.cols(); ++k) {
                double s = a.at(i, k) + b.at(k, j);
                if (s < best) {
                    best = s;
                    arg = k;
                }
            }
            d.at(i, j) = best;
            w.at(i, j) = arg;
        }
    }
    return {d, w};
}

std::pair<WeightMatrix, WitnessMatrix> minplus_approx(const WeightMatrix& a,
                                                      const WeightMatrix& b, double eps) {
    if (a.cols() != b.rows()) throw DimensionMismatch("min-plus dimensions disagree");
    if (!(eps > 0.0 && eps <= 1.0)) throw BadEpsilon("eps must lie in (0,1]");
    int n = a.rows(), m = a.cols(), p = b.cols();
    double max_entry = 0.0;
    auto validate = [&](const WeightMatrix& x, const char* side) {
        for (int i = 0; i < x.rows(); ++i) {
            for (int j = 0; j < x.cols(); ++j) {
                double v = x.at(i, j);
                if (v == kInf) continue;
                if (std::isnan(v) || v < 0.0 || (v > 0.0 && v < 1.0)) {
                    throw EntryOutOfRange(std::string(side) + " finite entries must be 0 or >= 1");
                }
                if (v > max_entry) max_entry = v;
            }
        }
    };
    validate(a, "A");
    validate(b, "B");

    WeightMatrix d(n, p);
    WitnessMatrix w(n, p);
    if (max_entry == 0.0) {
        // Only zeros and infinities: a plain boolean-style pass is exact.
        auto [de, we] = minplus_exact(a, b);
        return {de, we};
    }

    // Rounded integer buffers reused across scales.
    std::vector<int64_t> ra(size_t(n) * m), rb(size_t(m) * p);
    for (double scale = 1.0; scale < 4.0 * max_entry; scale *= 2.0) {
        double unit = eps * scale / 4.0;
        auto round_up = [&](double v) -> int64_t {
            if (v == kInf || v > scale) return -1;
            return int64_t(std::ceil(v / unit - 1e-12));
        };
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < m; ++k) ra[size_t(i) * m + k] = round_up(a.at(i, k));
        for (int k = 0; k < m; ++k)
            for (int j = 0; j < p; ++j) rb[size_t(k) * p + j] = round_up(b.at(k, j));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < p; ++j) {
                int64_t best = -1;
                int arg = WitnessMatrix::kNone;
                for (int k = 0; k < m; ++k) {
                    int64_t x = ra[size_t(i) * m + k], y = rb[size_t(k) * p + j];
                    if (x < 0 || y < 0) continue;
                    int64_t s = x + y;
                    if (best < 0 || s < best) {
                        best = s;
                        arg = k;
                    }
                }
                if (arg == WitnessMatrix::kNone) continue;
                double realized = a.at(i, arg) + b.at(arg, j);
                if (realized < d.at(i, j)) {
                    d.at(i, j) = realized;
                    w.at(i, j) = arg;
                }
            }
        }
    }
    return {d, w};
}

std::vector<int> greedy_hitting_set(const std::vector<std::vector<int>>& paths, int n) {
    std::vector<int> chosen;
    if (paths.empty()) return chosen;
    size_t hops = paths[0].size() - 1;
    for (const auto& path : paths) {
        if (path.size() < 2 || path.size() - 1 != hops) {
            throw Error("hitting set input paths must share one hop length >= 1");
        }
    }
    std::vector<char> hit(paths.size(), 0);
    size_t remaining = paths.size();
    while (remaining > 0) {
        std::vector<int> cover(n, 0);
        for (size_t pi = 0; pi < paths.size(); ++pi) {
            if (hit[pi]) continue;
            for (int v : paths[pi]) cover[v]++;
        }
        int best = 0;
        for (int v = 1; v < n; ++v) {
            if (cover[v] > cover[best]) best = v;
        }
        chosen.push_back(best);
        for (size_t pi = 0; pi < paths.size(); ++pi) {
            if (hit[pi]) continue;
            for (int v : paths[pi]) {
                if (v == best) {
                    hit[pi] = 1;
                    --remaining;
                    break;
                }
            }
        }
    }
    double bound = (double(n) / double(hops)) * (1.0 + std::log(double(paths.size())));
    assert(double(chosen.size()) <= bound + 1e-9);
    (void)bound;
    return chosen;
}

}  // namespace dygraph
