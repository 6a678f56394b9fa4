#include "specex/graph.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace specex {

namespace {

void check_order(int n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order out of range 1..64: " + std::to_string(n));
}

int count_edges(const std::vector<std::uint64_t>& adj) {
    int total = 0;
    for (std::uint64_t row : adj) total += std::popcount(row);
    return total / 2;
}

}  // namespace

Graph Graph::empty(int n) {
    check_order(n);
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), 0);
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g = empty(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        g.adj_[u] |= 1ull << v;
        g.adj_[v] |= 1ull << u;
    }
    g.m_ = count_edges(g.adj_);
    return g;
}

Graph Graph::from_rows(std::vector<std::uint64_t> rows) {
    const int n = static_cast<int>(rows.size());
    check_order(n);
    const std::uint64_t mask = n == 64 ? ~0ull : (1ull << n) - 1;
    for (int v = 0; v < n; ++v) {
        if (rows[v] & ~mask) throw std::invalid_argument("adjacency bit beyond vertex range");
        if ((rows[v] >> v) & 1u) throw std::invalid_argument("self-loop rejected");
        for (int u = v + 1; u < n; ++u)
            if (((rows[v] >> u) & 1u) != ((rows[u] >> v) & 1u))
                throw std::invalid_argument("adjacency not symmetric");
    }
    Graph g;
    g.n_ = n;
    g.adj_ = std::move(rows);
    g.m_ = count_edges(g.adj_);
    return g;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

std::uint64_t Graph::vertex_mask() const { return n_ == 64 ? ~0ull : (1ull << n_) - 1; }

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int v = 0; v < n_; ++v) {
        std::uint64_t upper = adj_[v] >> (v + 1) << (v + 1);
        while (upper) {
            int u = std::countr_zero(upper);
            out.emplace_back(v, u);
            upper &= upper - 1;
        }
    }
    return out;
}

Graph Graph::complement() const {
    Graph g;
    g.n_ = n_;
    g.adj_.resize(adj_.size());
    const std::uint64_t mask = vertex_mask();
    for (int v = 0; v < n_; ++v) g.adj_[v] = ~adj_[v] & mask & ~(1ull << v);
    g.m_ = n_ * (n_ - 1) / 2 - m_;
    return g;
}

bool Graph::is_connected() const {
    if (n_ == 0) return false;
    std::uint64_t seen = 1ull, frontier = 1ull;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj_[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == vertex_mask();
}

bool Graph::is_bipartite() const {
    std::vector<int> side(static_cast<std::size_t>(n_), -1);
    std::vector<int> stack;
    for (int start = 0; start < n_; ++start) {
        if (side[start] >= 0) continue;
        side[start] = 0;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            std::uint64_t nb = adj_[v];
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (side[u] < 0) {
                    side[u] = side[v] ^ 1;
                    stack.push_back(u);
                } else if (side[u] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Graph Graph::permuted(const std::vector<int>& order) const {
    if (static_cast<int>(order.size()) != n_) throw std::invalid_argument("permutation length mismatch");
    std::vector<int> pos(static_cast<std::size_t>(n_), -1);
    for (int i = 0; i < n_; ++i) {
        int v = order[i];
        if (v < 0 || v >= n_ || pos[v] >= 0) throw std::invalid_argument("not a permutation");
        pos[v] = i;
    }
    Graph g;
    g.n_ = n_;
    g.m_ = m_;
    g.adj_.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
        std::uint64_t old_row = adj_[order[i]];
        while (old_row) {
            int u = std::countr_zero(old_row);
            old_row &= old_row - 1;
            g.adj_[i] |= 1ull << pos[u];
        }
    }
    return g;
}

Graph Graph::with_added_vertex(std::uint64_t neighbors) const {
    check_order(n_ + 1);
    if (neighbors & ~vertex_mask()) throw std::invalid_argument("neighbor set beyond vertex range");
    Graph g;
    g.n_ = n_ + 1;
    g.adj_ = adj_;
    g.adj_.push_back(neighbors);
    std::uint64_t nb = neighbors;
    while (nb) {
        int v = std::countr_zero(nb);
        nb &= nb - 1;
        g.adj_[v] |= 1ull << n_;
    }
    g.m_ = m_ + std::popcount(neighbors);
    return g;
}

Graph Graph::without_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    if (n_ == 1) throw std::invalid_argument("cannot delete the last vertex");
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n_) - 1);
    for (int u = 0; u < n_; ++u)
        if (u != v) order.push_back(u);
    const std::uint64_t low = (1ull << v) - 1;
    Graph g;
    g.n_ = n_ - 1;
    g.adj_.reserve(order.size());
    for (int u : order) {
        std::uint64_t row = adj_[u];
        g.adj_.push_back((row & low) | ((row >> (v + 1)) << v));
    }
    g.m_ = m_ - degree(v);
    return g;
}

Graph Graph::with_edge(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("bad edge");
    Graph g = *this;
    if (!g.has_edge(u, v)) {
        g.adj_[u] |= 1ull << v;
        g.adj_[v] |= 1ull << u;
        ++g.m_;
    }
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("bad edge");
    Graph g = *this;
    if (g.has_edge(u, v)) {
        g.adj_[u] &= ~(1ull << v);
        g.adj_[v] &= ~(1ull << u);
        --g.m_;
    }
    return g;
}

Graph complete_graph(int k) {
    check_order(k);
    Graph g = Graph::empty(k);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < k; ++v)
        for (int u = v + 1; u < k; ++u) edges.emplace_back(v, u);
    return Graph::from_edges(k, edges);
}

Graph turan_union(int n, int alpha) {
    check_order(n);
    if (alpha < 1 || alpha > n) throw std::invalid_argument("turan_union requires 1 <= alpha <= n");
    std::vector<std::pair<int, int>> edges;
    int offset = 0;
    for (int i = 0; i < alpha; ++i) {
        int size = n / alpha + (i < n % alpha ? 1 : 0);
        for (int v = 0; v < size; ++v)
            for (int u = v + 1; u < size; ++u) edges.emplace_back(offset + v, offset + u);
        offset += size;
    }
    return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
    check_order(n);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    return g.with_edge(n - 1, 0);
}

bool is_cut_vertex(const Graph& g, int v) {
    if (g.order() <= 2) return false;
    return !g.without_vertex(v).is_connected();
}

int CliqueTreeSpec::total_order() const {
    return std::accumulate(sizes.begin(), sizes.end(), 0);
}

void CliqueTreeSpec::validate() const {
    if (alpha < 1) throw std::invalid_argument("clique tree needs at least one node");
    if (static_cast<int>(sizes.size()) != alpha) throw std::invalid_argument("one clique size per tree node required");
    if (static_cast<int>(tree_edges.size()) != alpha - 1)
        throw std::invalid_argument("a tree on alpha nodes has alpha-1 edges");
    if (attachments.size() != tree_edges.size())
        throw std::invalid_argument("one attachment pair per tree edge required");

    const int n = total_order();
    check_order(n);
    const int lo = n / alpha, hi = (n + alpha - 1) / alpha;
    for (int s : sizes)
        if (s != lo && s != hi) throw std::invalid_argument("clique sizes must be balanced");

    // Union-find connectivity test; alpha-1 edges + connected <=> tree.
    std::vector<int> parent(static_cast<std::size_t>(alpha));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t e = 0; e < tree_edges.size(); ++e) {
        auto [a, b] = tree_edges[e];
        if (a < 0 || a >= alpha || b < 0 || b >= alpha || a == b)
            throw std::invalid_argument("tree edge endpoint out of range");
        int ra = find(a), rb = find(b);
        if (ra == rb) throw std::invalid_argument("tree edges contain a cycle");
        parent[ra] = rb;
        auto [ia, ib] = attachments[e];
        if (ia < 0 || ia >= sizes[a] || ib < 0 || ib >= sizes[b])
            throw std::invalid_argument("attachment index outside its clique");
    }
}

Graph blowup(const CliqueTreeSpec& spec) {
    spec.validate();
    std::vector<int> offset(static_cast<std::size_t>(spec.alpha), 0);
    for (int i = 1; i < spec.alpha; ++i) offset[i] = offset[i - 1] + spec.sizes[i - 1];

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < spec.alpha; ++i)
        for (int v = 0; v < spec.sizes[i]; ++v)
            for (int u = v + 1; u < spec.sizes[i]; ++u) edges.emplace_back(offset[i] + v, offset[i] + u);
    for (std::size_t e = 0; e < spec.tree_edges.size(); ++e) {
        auto [a, b] = spec.tree_edges[e];
        auto [ia, ib] = spec.attachments[e];
        edges.emplace_back(offset[a] + ia, offset[b] + ib);
    }
    return Graph::from_edges(spec.total_order(), edges);
}

std::vector<int> balanced_sizes(int n, int alpha, const std::vector<int>& fill_order) {
    std::vector<int> sizes(static_cast<std::size_t>(alpha), n / alpha);
    int extra = n % alpha;
    for (int i = 0; i < extra; ++i) ++sizes[fill_order[i]];
    return sizes;
}

Graph clique_path(int n, int alpha) {
    check_order(n);
    if (alpha < 1 || alpha > n) throw std::invalid_argument("clique_path requires 1 <= alpha <= n");
    if (alpha == 1) return complete_graph(n);

    const int k = n / alpha;
    if (k == 1 && alpha >= 3)
        throw std::invalid_argument("clique_path with unit cliques cannot host two distinct attachments");

    // Larger cliques go to the leaves first, then interior nodes in
    // ascending index order.
    std::vector<int> fill_order = {0, alpha - 1};
    for (int i = 1; i < alpha - 1; ++i) fill_order.push_back(i);
    CliqueTreeSpec spec;
    spec.alpha = alpha;
    spec.sizes = balanced_sizes(n, alpha, fill_order);
    for (int i = 0; i + 1 < alpha; ++i) {
        spec.tree_edges.emplace_back(i, i + 1);
        // Interior cliques take their two bridges at two distinct vertices.
        spec.attachments.emplace_back(i == 0 ? 0 : 1, 0);
    }
    return blowup(spec);
}

Graph clique_star(int n, int alpha) {
    check_order(n);
    if (alpha < 2) throw std::invalid_argument("clique_star requires alpha >= 2");
    if (alpha > n) throw std::invalid_argument("clique_star requires alpha <= n");

    std::vector<int> fill_order;
    for (int i = 1; i < alpha; ++i) fill_order.push_back(i);
    fill_order.push_back(0);
    CliqueTreeSpec spec;
    spec.alpha = alpha;
    spec.sizes = balanced_sizes(n, alpha, fill_order);
    for (int leaf = 1; leaf < alpha; ++leaf) {
        spec.tree_edges.emplace_back(0, leaf);
        // Every bridge shares the one center vertex.
        spec.attachments.emplace_back(0, 0);
    }
    return blowup(spec);
}

}  // namespace specex
