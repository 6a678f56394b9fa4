#include "specex/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "specex/canonical.hpp"
#include "specex/combinat.hpp"

namespace specex {

namespace {

struct RowsHash {
    std::size_t operator()(const std::vector<std::uint64_t>& rows) const {
        std::size_t h = rows.size();
        for (std::uint64_t r : rows) h = h * 0x9e3779b97f4a7c15ull + (r ^ (r >> 29));
        return h;
    }
};

using SeenSet = std::unordered_set<std::vector<std::uint64_t>, RowsHash>;

std::vector<std::uint64_t> row_key(const Graph& g) {
    std::vector<std::uint64_t> key(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) key[static_cast<std::size_t>(v)] = g.row(v);
    return key;
}

bool rows_less(const Graph& a, const Graph& b) {
    for (int v = 0; v < a.order(); ++v)
        if (a.row(v) != b.row(v)) return a.row(v) < b.row(v);
    return false;
}

void check_cap(int n, const EnumerationOptions& opt) {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    if (n > opt.max_n)
        throw std::invalid_argument("enumeration cap exceeded (n > " + std::to_string(opt.max_n) + ")");
    if (n > kMaxVertices) throw std::invalid_argument("enumeration beyond the vertex limit");
}

}  // namespace

std::vector<Graph> all_graphs(int n, const EnumerationOptions& opt) {
    check_cap(n, opt);

    std::vector<Graph> level{Graph::empty(1)};
    for (int k = 1; k < n; ++k) {
        SeenSet seen;
        std::vector<Graph> next;
        const std::uint64_t subsets = 1ull << k;

        // Chunked parallel canonicalization with a sequential, order-free
        // dedup merge; output order is fixed by the final sort.
        const std::size_t chunk = 64;
        for (std::size_t base = 0; base < level.size(); base += chunk) {
            const std::size_t end = std::min(level.size(), base + chunk);
            const std::size_t jobs = (end - base) * subsets;
            auto canon = scan::map_ordered<Graph>(
                jobs,
                [&](std::size_t job) {
                    const Graph& parent = level[base + job / subsets];
                    const std::uint64_t mask = job % subsets;
                    return canonical_graph(parent.with_added_vertex(mask));
                },
                opt.scan);
            for (auto& g : canon)
                if (seen.insert(row_key(g)).second) next.push_back(std::move(g));
        }
        std::sort(next.begin(), next.end(), rows_less);
        level = std::move(next);
    }
    return level;
}

std::vector<Graph> connected_graphs(int n, const EnumerationOptions& opt) {
    auto graphs = all_graphs(n, opt);
    std::erase_if(graphs, [](const Graph& g) { return !g.is_connected(); });
    return graphs;
}

std::vector<Graph> family_G(int n, int alpha, const EnumerationOptions& opt) {
    if (alpha < 1 || alpha > n) throw std::invalid_argument("family_G requires 1 <= alpha <= n");
    auto graphs = connected_graphs(n, opt);
    std::erase_if(graphs, [&](const Graph& g) { return independence_number(g) != alpha; });
    return graphs;
}

std::vector<Graph> all_trees(int alpha) {
    if (alpha < 1 || alpha > kMaxVertices) throw std::invalid_argument("tree order out of range");
    if (alpha == 1) return {Graph::empty(1)};
    if (alpha == 2) return {path_graph(2)};

    // Prufer sequences cover every labeled tree; dedup by canonical form.
    SeenSet seen;
    std::vector<Graph> out;
    std::vector<int> seq(static_cast<std::size_t>(alpha - 2), 0);
    for (;;) {
        std::vector<int> deg(static_cast<std::size_t>(alpha), 1);
        for (int s : seq) ++deg[static_cast<std::size_t>(s)];
        std::vector<std::pair<int, int>> edges;
        for (int s : seq) {
            int leaf = 0;
            while (deg[static_cast<std::size_t>(leaf)] != 1) ++leaf;
            edges.emplace_back(leaf, s);
            deg[static_cast<std::size_t>(leaf)] = 0;
            --deg[static_cast<std::size_t>(s)];
        }
        std::vector<int> last;
        for (int v = 0; v < alpha; ++v)
            if (deg[static_cast<std::size_t>(v)] == 1) last.push_back(v);
        edges.emplace_back(last[0], last[1]);

        Graph tree = canonical_graph(Graph::from_edges(alpha, edges));
        if (seen.insert(row_key(tree)).second) out.push_back(std::move(tree));

        int pos = alpha - 3;
        while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == alpha - 1) {
            seq[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++seq[static_cast<std::size_t>(pos)];
    }
    std::sort(out.begin(), out.end(), rows_less);
    return out;
}

namespace {

void for_each_size_assignment(int alpha, int small, int extras,
                              const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> sizes(static_cast<std::size_t>(alpha), small);
    if (extras == 0) {
        fn(sizes);
        return;
    }
    std::vector<int> pick(static_cast<std::size_t>(extras));
    for (int i = 0; i < extras; ++i) pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
        std::fill(sizes.begin(), sizes.end(), small);
        for (int i : pick) ++sizes[static_cast<std::size_t>(i)];
        fn(sizes);
        int pos = extras - 1;
        while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == alpha - extras + pos) --pos;
        if (pos < 0) break;
        ++pick[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < extras; ++i)
            pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
    }
}

}  // namespace

std::vector<Graph> family_T(int n, int alpha) {
    if (alpha < 1 || alpha > n) throw std::invalid_argument("family_T requires 1 <= alpha <= n");
    if (n > kMaxVertices) throw std::invalid_argument("family_T beyond the vertex limit");

    const int small = n / alpha;
    const int extras = n % alpha;

    SeenSet seen;
    std::vector<Graph> out;

    for (const Graph& tree : all_trees(alpha)) {
        const auto tree_edges = tree.edges();
        for_each_size_assignment(alpha, small, extras, [&](const std::vector<int>& sizes) {
            // Every attachment choice per tree edge (mixed-radix counter).
            std::vector<std::pair<int, int>> attach(tree_edges.size(), {0, 0});
            for (;;) {
                CliqueTreeSpec spec;
                spec.alpha = alpha;
                spec.tree_edges = tree_edges;
                spec.sizes = sizes;
                spec.attachments = attach;
                Graph g = blowup(spec);
                if (independence_number(g) == alpha) {
                    Graph canon = canonical_graph(g);
                    if (seen.insert(row_key(canon)).second) out.push_back(std::move(canon));
                }
                std::size_t e = 0;
                for (; e < attach.size(); ++e) {
                    auto [a, b] = tree_edges[e];
                    if (++attach[e].second < sizes[static_cast<std::size_t>(b)]) break;
                    attach[e].second = 0;
                    if (++attach[e].first < sizes[static_cast<std::size_t>(a)]) break;
                    attach[e].first = 0;
                }
                if (e == attach.size()) break;
            }
        });
    }
    std::sort(out.begin(), out.end(), rows_less);
    return out;
}

}  // namespace specex
