#include "specex/combinat.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace specex {

namespace {

// Tomita-style max clique: candidates are greedily colored, the color index
// bounds the best extension, and vertices are expanded in reverse color order.
class MaxClique {
public:
    explicit MaxClique(const Graph& g) : g_(g) {}

    int solve() {
        best_ = 0;
        expand(0, g_.vertex_mask());
        return best_;
    }

private:
    void expand(int current, std::uint64_t candidates) {
        if (!candidates) {
            best_ = std::max(best_, current);
            return;
        }
        std::vector<int> order;
        std::vector<int> bound;
        color_sort(candidates, order, bound);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (current + bound[i] <= best_) return;
            const int v = order[i];
            expand(current + 1, candidates & g_.row(v));
            candidates &= ~(1ull << v);
        }
    }

    void color_sort(std::uint64_t candidates, std::vector<int>& order, std::vector<int>& bound) const {
        std::uint64_t uncolored = candidates;
        int color = 0;
        while (uncolored) {
            ++color;
            std::uint64_t available = uncolored;
            while (available) {
                const int v = std::countr_zero(available);
                available &= available - 1;
                available &= ~g_.row(v);
                uncolored &= ~(1ull << v);
                order.push_back(v);
                bound.push_back(color);
            }
        }
    }

    const Graph& g_;
    int best_ = 0;
};

void accumulate_shifted(const std::vector<BigInt>& from, std::vector<BigInt>& into, int shift) {
    for (std::size_t s = 0; s < from.size() && s + static_cast<std::size_t>(shift) < into.size(); ++s)
        into[s + static_cast<std::size_t>(shift)] += from[s];
}

std::vector<BigInt> independent_table(const Graph& g, std::uint64_t allowed) {
    if (!allowed) return {BigInt(1)};
    const int v = std::countr_zero(allowed);
    auto without = independent_table(g, allowed & ~(1ull << v));
    std::vector<BigInt> table(static_cast<std::size_t>(std::popcount(allowed)) + 1, 0);
    accumulate_shifted(without, table, 0);
    if ((g.row(v) & allowed) == 0) {
        // v is isolated inside `allowed`: an independent (1 + x) factor.
        accumulate_shifted(without, table, 1);
    } else {
        auto with = independent_table(g, allowed & ~(g.row(v) | (1ull << v)));
        accumulate_shifted(with, table, 1);
    }
    return table;
}

std::vector<BigInt> clique_table(const Graph& g, std::uint64_t allowed) {
    if (!allowed) return {BigInt(1)};
    const int v = std::countr_zero(allowed);
    auto without = clique_table(g, allowed & ~(1ull << v));
    auto with = clique_table(g, allowed & g.row(v));
    std::vector<BigInt> table(std::max(without.size(), with.size() + 1), 0);
    accumulate_shifted(without, table, 0);
    accumulate_shifted(with, table, 1);
    return table;
}

std::vector<std::uint64_t> component_masks(const Graph& g) {
    std::vector<std::uint64_t> out;
    std::uint64_t remaining = g.vertex_mask();
    while (remaining) {
        std::uint64_t seen = remaining & (~remaining + 1), frontier = seen;
        while (frontier) {
            std::uint64_t next = 0;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= g.row(v);
            }
            frontier = next & ~seen;
            seen |= next;
        }
        out.push_back(seen);
        remaining &= ~seen;
    }
    return out;
}

bool colorable(const Graph& g, const std::vector<int>& order, std::vector<int>& colors,
               std::size_t index, int k) {
    if (index == order.size()) return true;
    const int v = order[index];
    int used = 0;
    for (std::size_t i = 0; i < index; ++i) used = std::max(used, colors[order[i]] + 1);
    const int limit = std::min(k, used + 1);  // new colors are interchangeable
    for (int c = 0; c < limit; ++c) {
        bool clash = false;
        std::uint64_t nb = g.row(v);
        while (nb && !clash) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            clash = colors[u] == c;
        }
        if (clash) continue;
        colors[v] = c;
        if (colorable(g, order, colors, index + 1, k)) return true;
        colors[v] = -1;
    }
    return false;
}

}  // namespace

int clique_number(const Graph& g) { return MaxClique(g).solve(); }

int independence_number(const Graph& g) { return clique_number(g.complement()); }

CountTable count_sets(const Graph& g, CountMode mode) {
    const int n = g.order();
    if (n > 24) throw std::invalid_argument("count_sets is capped at n <= 24");
    CountTable out;
    out.counts.assign(static_cast<std::size_t>(n) + 1, 0);

    if (mode == CountMode::Independent) {
        // Disjoint components multiply: convolve their tables.
        std::vector<BigInt> acc{BigInt(1)};
        for (std::uint64_t mask : component_masks(g)) {
            auto part = independent_table(g, mask);
            std::vector<BigInt> next(acc.size() + part.size() - 1, 0);
            for (std::size_t i = 0; i < acc.size(); ++i) {
                if (acc[i] == 0) continue;
                for (std::size_t j = 0; j < part.size(); ++j) next[i + j] += acc[i] * part[j];
            }
            acc = std::move(next);
        }
        for (std::size_t s = 0; s < acc.size() && s < out.counts.size(); ++s) out.counts[s] = acc[s];
    } else {
        // Cliques of size >= 1 live inside one component.
        out.counts[0] = 1;
        for (std::uint64_t mask : component_masks(g)) {
            auto part = clique_table(g, mask);
            for (std::size_t s = 1; s < part.size() && s < out.counts.size(); ++s)
                out.counts[s] += part[s];
        }
    }
    return out;
}

bool k_colorable(const Graph& g, int k) {
    const int n = g.order();
    if (n > 16) throw std::invalid_argument("colorability test is capped at n <= 16");
    if (k >= n) return true;
    if (k < 1) return false;

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    return colorable(g, order, colors, 0, k);
}

int chromatic_number(const Graph& g) {
    const int n = g.order();
    if (n > 16) throw std::invalid_argument("chromatic_number is capped at n <= 16");
    if (g.size() == 0) return 1;

    for (int k = clique_number(g); k < n; ++k)
        if (k_colorable(g, k)) return k;
    return n;
}

}  // namespace specex
