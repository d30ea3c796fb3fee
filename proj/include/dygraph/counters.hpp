// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace dygraph {

// Monotone operation totals, shared by an engine and everything layered on it.
struct Counters {
    uint64_t engine_queries = 0;   // point-to-point queries answered from an inverse
    uint64_t rank1_updates = 0;    // Sherman-Morrison applications
    uint64_t rebuilds = 0;         // full re-randomized re-inversions
    uint64_t detector_queries = 0; // queries answered by layered detectors

    Counters& operator+=(const Counters& o) {
        engine_queries += o.engine_queries;
        rank1_updates += o.rank1_updates;
        rebuilds += o.rebuilds;
        detector_queries += o.detector_queries;
        return *this;
    }
    Counters operator-(const Counters& o) const {
        return {engine_queries - o.engine_queries, rank1_updates - o.rank1_updates,
                rebuilds - o.rebuilds, detector_queries - o.detector_queries};
    }
};

}  // namespace dygraph
