#pragma once

#include <vector>

#include "specex/bigint.hpp"
#include "specex/graph.hpp"

namespace specex {

/// Exact independence number via branch-and-bound on the complement's clique
/// number with greedy-coloring upper bounds.
int independence_number(const Graph& g);

int clique_number(const Graph& g);

enum class CountMode { Independent, Clique };

/// Exact per-size counts i_s(G) or k_s(G), s = 0..n.
struct CountTable {
    std::vector<BigInt> counts;
    const BigInt& at(int s) const { return counts[static_cast<std::size_t>(s)]; }
};

/// Exhaustive subset recursion with pruning; capped at n <= 24.
CountTable count_sets(const Graph& g, CountMode mode);

/// Exact chromatic number by branch-and-bound k-colorability, capped at n <= 16.
int chromatic_number(const Graph& g);

bool k_colorable(const Graph& g, int k);

}  // namespace specex
