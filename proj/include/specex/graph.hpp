#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace specex {

inline constexpr int kMaxVertices = 64;

/// Immutable simple graph on at most 64 vertices. Adjacency is stored as one
/// 64-bit row per vertex; bit u of row v is set iff v~u. Construction goes
/// through the factories, which validate symmetry and the no-loop rule.
class Graph {
public:
    Graph() = default;

    static Graph empty(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph from_rows(std::vector<std::uint64_t> rows);

    int order() const { return n_; }
    int size() const { return m_; }

    bool has_edge(int u, int v) const { return (adj_[v] >> u) & 1u; }
    int degree(int v) const;
    std::uint64_t row(int v) const { return adj_[v]; }
    std::uint64_t vertex_mask() const;

    std::vector<std::pair<int, int>> edges() const;

    Graph complement() const;
    bool is_connected() const;
    bool is_bipartite() const;

    /// Relabeled copy: vertex i of the result is the original vertex order[i].
    Graph permuted(const std::vector<int>& order) const;

    /// Copy with one extra vertex adjacent to the given set of old vertices.
    Graph with_added_vertex(std::uint64_t neighbors) const;
    Graph without_vertex(int v) const;
    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> adj_;
};

Graph complete_graph(int k);
Graph turan_union(int n, int alpha);
Graph path_graph(int n);
Graph cycle_graph(int n);

bool is_cut_vertex(const Graph& g, int v);

/// Blueprint for a tree-of-cliques blowup: a tree on alpha nodes, a balanced
/// clique order per node, and for every tree edge the attachment vertex
/// chosen inside each incident clique.
struct CliqueTreeSpec {
    int alpha = 0;
    std::vector<std::pair<int, int>> tree_edges;
    std::vector<int> sizes;
    /// attachments[e] = indices inside the cliques of tree_edges[e].first
    /// and tree_edges[e].second.
    std::vector<std::pair<int, int>> attachments;

    int total_order() const;
    void validate() const;  // throws std::invalid_argument on a malformed spec
};

Graph blowup(const CliqueTreeSpec& spec);

Graph clique_path(int n, int alpha);
Graph clique_star(int n, int alpha);

/// Clique orders for a balanced blowup: alpha values in {floor(n/alpha),
/// ceil(n/alpha)}, with the larger cliques assigned to the nodes listed
/// first in fill_order.
std::vector<int> balanced_sizes(int n, int alpha, const std::vector<int>& fill_order);

}  // namespace specex
