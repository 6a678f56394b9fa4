#pragma once

#include <string>
#include <utility>
#include <vector>

#include "specex/graph.hpp"

namespace specex {

/// An edge-rotation instance: a graph, the rotated variant, and the labeled
/// vertices the construction exposes for assertions.
struct RotationInstance {
    Graph g;
    Graph g_prime;
    std::vector<std::pair<std::string, int>> labels;
    std::string description;

    int label(const std::string& name) const;  // throws on unknown label
};

/// Pendant clique path of l+p cliques of order k hangs from a non-cut vertex
/// hv of H; the rotated variant moves the tail of l cliques from the end of
/// the stem up to hv itself. Requires a clique-path copy of l cliques inside
/// H avoiding hv (verified by subgraph search). Exposed labels: v1 (=hv),
/// v2, v3 (stem-side bridge end), v4 (tail-side bridge end).
RotationInstance build_L2_instance(const Graph& H, int hv, int k, int l, int p);

/// u and v share a clique of order k = deg(u)+1 and have no other base
/// edges; t > 1 pendant clique paths (path_lengths[i] cliques of order k
/// each) hang from u. The rotated variant moves the first path's bridge from
/// u to v. Exposed labels: u, v, u1.
RotationInstance build_L5_instance(const Graph& base, int u, int v,
                                   const std::vector<int>& path_lengths);

/// Same pendant stem as L2 but the tail is re-attached inside H: at a vertex
/// v01 of hv's own k-clique V0 (the V0 vertex with the most edges into the
/// rest of H, ties to the smallest index). H must differ from a bare
/// k-clique. With l = 0 the tail is the whole pendant path and the rotated
/// edge is the attachment bridge itself. Exposed labels: v01, v0k (=hv),
/// vpk, vp+1_1.
RotationInstance build_L6_instance(const Graph& H, int hv, int k, int l, int p);

enum class RotationDirection { Increase, Decrease };

struct RotationOutcome {
    double lambda_g = 0.0;
    double lambda_g_prime = 0.0;
    double margin = 0.0;  // lambda(G') - lambda(G)
    bool pass = false;
    bool exact_certified = false;  // settled by exact root comparison
    std::string details;
};

/// Strict spectral comparison of the pair with margin 1e-9; margins under
/// 1e-6 are cross-certified by exact characteristic-polynomial root order.
RotationOutcome verify_rotation(const RotationInstance& instance, RotationDirection expected);

/// Non-induced copy of the clique path on l cliques of order k inside
/// `host`, avoiding `forbidden` (pass -1 to allow every vertex).
bool contains_clique_path_copy(const Graph& host, int k, int l, int forbidden);

}  // namespace specex
