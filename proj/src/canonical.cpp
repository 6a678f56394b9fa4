#include "specex/canonical.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace specex {

namespace {

// Degree/neighborhood color refinement followed by backtracking over the
// remaining cells; the canonical form is the lexicographically smallest
// bit-row sequence over the orderings the search visits. Refinement keys are
// compared by value only, so the visited set is label-invariant.
class Canonicalizer {
public:
    explicit Canonicalizer(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalForm run() {
        std::vector<int> colors(static_cast<std::size_t>(n_), 0);
        refine(colors);
        search(colors);
        CanonicalForm form;
        form.n = n_;
        form.rows = std::move(best_rows_);
        form.order = std::move(best_order_);
        return form;
    }

private:
    // Equitable refinement: repeatedly split color classes by the multiset of
    // neighbor colors until stable. New color ids follow the sorted signature
    // order, which depends only on isomorphism-invariant data.
    void refine(std::vector<int>& colors) const {
        for (;;) {
            int color_count = *std::max_element(colors.begin(), colors.end()) + 1;
            std::vector<std::vector<int>> signature(static_cast<std::size_t>(n_));
            for (int v = 0; v < n_; ++v) {
                auto& sig = signature[v];
                sig.assign(static_cast<std::size_t>(color_count) + 1, 0);
                sig[0] = colors[v];
                std::uint64_t nb = g_.row(v);
                while (nb) {
                    int u = std::countr_zero(nb);
                    nb &= nb - 1;
                    ++sig[1 + colors[u]];
                }
            }
            std::vector<int> idx(static_cast<std::size_t>(n_));
            for (int v = 0; v < n_; ++v) idx[v] = v;
            std::sort(idx.begin(), idx.end(), [&](int a, int b) { return signature[a] < signature[b]; });

            std::vector<int> next(static_cast<std::size_t>(n_), 0);
            int next_count = 0;
            for (std::size_t i = 0; i < idx.size(); ++i) {
                if (i > 0 && signature[idx[i]] != signature[idx[i - 1]]) ++next_count;
                next[idx[i]] = next_count;
            }
            ++next_count;
            if (next_count == color_count && next == colors) return;
            colors = std::move(next);
            if (next_count == n_) return;
        }
    }

    // Vertices with identical adjacency outside the pair are interchangeable;
    // a cell of pairwise twins contributes one ordering, not a factorial.
    bool cell_is_twin_class(const std::vector<int>& cell) const {
        for (std::size_t i = 0; i < cell.size(); ++i)
            for (std::size_t j = i + 1; j < cell.size(); ++j) {
                const std::uint64_t exclude = ~((1ull << cell[i]) | (1ull << cell[j]));
                if ((g_.row(cell[i]) & exclude) != (g_.row(cell[j]) & exclude)) return false;
            }
        return true;
    }

    void search(std::vector<int> colors) {
        if (++nodes_ > kNodeBudget)
            throw std::runtime_error("canonical labeling search budget exceeded");

        int target_color = -1;
        std::vector<int> cell;
        for (int c = 0; target_color < 0; ++c) {
            cell.clear();
            for (int v = 0; v < n_; ++v)
                if (colors[v] == c) cell.push_back(v);
            if (cell.empty()) break;
            if (cell.size() > 1) target_color = c;
        }

        if (target_color < 0) {
            emit_leaf(colors);
            return;
        }
        if (cell_is_twin_class(cell)) {
            // Any internal order yields the same row sequence: fix one.
            for (int v = 0; v < n_; ++v)
                if (colors[v] > target_color) colors[v] += static_cast<int>(cell.size()) - 1;
            for (std::size_t j = 0; j < cell.size(); ++j)
                colors[cell[j]] = target_color + static_cast<int>(j);
            refine(colors);
            search(std::move(colors));
            return;
        }
        for (int v : cell) {
            std::vector<int> branch = colors;
            for (int u = 0; u < n_; ++u)
                if (branch[u] > target_color) ++branch[u];
            branch[v] = target_color;
            for (int u : cell)
                if (u != v) branch[u] = target_color + 1;
            refine(branch);
            search(std::move(branch));
        }
    }

    void emit_leaf(const std::vector<int>& colors) {
        std::vector<int> order(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) order[colors[v]] = v;
        std::vector<int> pos(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) pos[order[i]] = i;

        std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i) {
            std::uint64_t nb = g_.row(order[i]);
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                rows[i] |= 1ull << pos[u];
            }
        }
        if (best_rows_.empty() || rows < best_rows_) {
            best_rows_ = std::move(rows);
            best_order_ = std::move(order);
        }
    }

    static constexpr long kNodeBudget = 5'000'000;

    const Graph& g_;
    int n_;
    long nodes_ = 0;
    std::vector<std::uint64_t> best_rows_;
    std::vector<int> best_order_;
};

}  // namespace

CanonicalForm canonical_label(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("canonical_label needs a nonempty graph");
    return Canonicalizer(g).run();
}

Graph canonical_graph(const Graph& g) { return g.permuted(canonical_label(g).order); }

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_label(a) == canonical_label(b);
}

}  // namespace specex
