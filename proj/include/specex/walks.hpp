#pragma once

#include <vector>

#include "specex/bigint.hpp"
#include "specex/graph.hpp"

namespace specex {

/// Number of closed walks of length s based at v: the (v,v) entry of A^s,
/// computed exactly by repeated squaring in integer arithmetic.
BigInt closed_walks(const Graph& g, int v, int s);

struct WalkRatioPoint {
    int s = 0;
    BigInt walks_i;  // sigma_s(v_i)
    BigInt walks_j;  // sigma_s(v_j)
};

struct WalkRatioReport {
    int vi = 0, vj = 0, s_max = 0;
    std::vector<WalkRatioPoint> trace;  // entries with walks_j > 0
    double final_ratio = 0.0;           // sigma_{s_max}(v_i) / sigma_{s_max}(v_j)
    double perron_i = 0.0, perron_j = 0.0;
    double perron_ratio_sq = 0.0;       // x_i^2 / x_j^2, the actual walk-ratio limit
    double convergence_gap = 0.0;       // |final_ratio - perron_ratio_sq|
    bool direction_matches = false;     // limit direction vs Perron order
};

/// Ratio trace sigma_s(v_i)/sigma_s(v_j) for s = 1..s_max on a connected
/// non-bipartite graph; entries with a zero denominator (small odd s on
/// near-bipartite graphs) are skipped. The verdict compares the limit
/// direction (>= 1 versus < 1, judged at s_max) against the Perron order of
/// the two entries, and records |ratio - x_i^2/x_j^2| at s_max.
WalkRatioReport walk_ratio_check(const Graph& g, int vi, int vj, int s_max);

}  // namespace specex
