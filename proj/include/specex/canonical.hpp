#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "specex/graph.hpp"

namespace specex {

/// Isomorphism-invariant representative labeling. Two graphs have equal
/// canonical bit-row sequences iff they are isomorphic; rows also serve as a
/// total-order key for deterministic streams.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint64_t> rows;
    std::vector<int> order;  // order[i] = original vertex at canonical position i

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.n == b.n && a.rows == b.rows;
    }
    friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        if (auto c = a.n <=> b.n; c != 0) return c;
        return a.rows <=> b.rows;
    }
};

CanonicalForm canonical_label(const Graph& g);

/// The graph relabeled into its canonical order.
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace specex
