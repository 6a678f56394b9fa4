#pragma once

#include <optional>
#include <vector>

#include "specex/graph.hpp"
#include "specex/scan.hpp"

namespace specex {

/// Stream selector for the enumeration surface.
struct FamilyFilter {
    int n = 0;
    std::optional<int> alpha;
    bool connected_only = true;
    bool include_disconnected = false;
};

struct EnumerationOptions {
    int max_n = 9;  // default cap; callers may raise it (SPECEX_MAX_N at the CLI)
    scan::Options scan;
};

/// One canonically labeled representative per isomorphism class, sorted by
/// canonical key; built by extending each (n-1)-vertex class by one vertex
/// and deduplicating the children by canonical form per level.
std::vector<Graph> all_graphs(int n, const EnumerationOptions& opt = {});

std::vector<Graph> connected_graphs(int n, const EnumerationOptions& opt = {});

/// Connected graphs of order n with independence number exactly alpha.
std::vector<Graph> family_G(int n, int alpha, const EnumerationOptions& opt = {});

/// All balanced tree-of-cliques blowups on n vertices over trees of order
/// alpha, every attachment choice and balanced size assignment, filtered to
/// independence number exactly alpha; one representative per class.
std::vector<Graph> family_T(int n, int alpha);

/// One representative per isomorphism class of trees on alpha nodes.
std::vector<Graph> all_trees(int alpha);

}  // namespace specex
