#include "specex/rotation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "specex/charpoly.hpp"
#include "specex/spectral.hpp"

namespace specex {

namespace {

constexpr double kStrictMargin = 1e-9;
constexpr double kExactFallback = 1e-6;

// Backtracking subgraph monomorphism: pattern edges must map to host edges,
// vertices injectively; host may carry extra edges.
bool embed(const Graph& pattern, const Graph& host, std::vector<int>& image,
           std::uint64_t used, std::size_t index, std::uint64_t allowed) {
    if (index == image.size()) return true;
    const int pv = static_cast<int>(index);
    std::uint64_t candidates = allowed & ~used;
    // Restrict to common neighbors of already-placed pattern neighbors.
    for (int prev = 0; prev < pv; ++prev)
        if (pattern.has_edge(prev, pv)) candidates &= host.row(image[static_cast<std::size_t>(prev)]);
    while (candidates) {
        const int hv = std::countr_zero(candidates);
        candidates &= candidates - 1;
        image[index] = hv;
        if (embed(pattern, host, image, used | (1ull << hv), index + 1, allowed)) return true;
    }
    return false;
}

// Appends a pendant clique path of `cliques` cliques of order k, bridged to
// `attach_at`; returns (entry vertex of the first clique, builder edges).
struct PendantChain {
    int first_entry = -1;
    std::vector<int> entries;  // entry vertex of clique i (toward the attachment)
    std::vector<int> exits;    // bridge-hosting vertex toward clique i+1
};

PendantChain append_chain(std::vector<std::pair<int, int>>& edges, int& next_vertex, int attach_at,
                          int k, int cliques) {
    PendantChain chain;
    int prev_exit = attach_at;
    for (int i = 0; i < cliques; ++i) {
        const int base = next_vertex;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) edges.emplace_back(base + a, base + b);
        edges.emplace_back(prev_exit, base);  // bridge into this clique's entry
        chain.entries.push_back(base);
        // Interior bridges leave from a vertex distinct from the entry.
        const int exit = k >= 2 ? base + 1 : base;
        chain.exits.push_back(exit);
        prev_exit = exit;
        next_vertex += k;
    }
    chain.first_entry = chain.entries.front();
    return chain;
}

std::vector<std::pair<int, int>> graph_edges(const Graph& g) { return g.edges(); }

}  // namespace

int RotationInstance::label(const std::string& name) const {
    for (const auto& [key, vertex] : labels)
        if (key == name) return vertex;
    throw std::invalid_argument("unknown rotation label: " + name);
}

bool contains_clique_path_copy(const Graph& host, int k, int l, int forbidden) {
    if (l == 0) return true;
    const int need = k * l;
    if (need > host.order() - (forbidden >= 0 ? 1 : 0)) return false;
    const Graph pattern = clique_path(need, l);
    std::uint64_t allowed = host.vertex_mask();
    if (forbidden >= 0) allowed &= ~(1ull << forbidden);
    std::vector<int> image(static_cast<std::size_t>(need), -1);
    return embed(pattern, host, image, 0, 0, allowed);
}

RotationInstance build_L2_instance(const Graph& H, int hv, int k, int l, int p) {
    if (k < 2) throw std::invalid_argument("clique order must be at least 2");
    if (l < 1 || p < 1) throw std::invalid_argument("both path segments must be nonempty");
    if (hv < 0 || hv >= H.order()) throw std::invalid_argument("attachment vertex out of range");
    if (!H.is_connected()) throw std::invalid_argument("H must be connected");
    if (is_cut_vertex(H, hv)) throw std::invalid_argument("attachment vertex must not be a cut vertex");
    if (!contains_clique_path_copy(H, k, l, hv))
        throw std::invalid_argument("H lacks the required clique-path copy avoiding the attachment vertex");

    auto edges = graph_edges(H);
    int next_vertex = H.order();
    const PendantChain chain = append_chain(edges, next_vertex, hv, k, l + p);
    const Graph g = Graph::from_edges(next_vertex, edges);

    const int v3 = chain.exits[static_cast<std::size_t>(p - 1)];     // stem side of the cut bridge
    const int v4 = chain.entries[static_cast<std::size_t>(p)];       // tail side of the cut bridge
    const int v2 = chain.entries[static_cast<std::size_t>(p - 1)];
    const Graph g_prime = g.without_edge(v3, v4).with_edge(hv, v4);

    RotationInstance instance;
    instance.g = g;
    instance.g_prime = g_prime;
    instance.labels = {{"v1", hv}, {"v2", v2}, {"v3", v3}, {"v4", v4}};
    std::ostringstream desc;
    desc << "chain of " << l + p << " cliques K_" << k << " at vertex " << hv
         << "; tail of " << l << " re-attached at the root";
    instance.description = desc.str();
    return instance;
}

RotationInstance build_L5_instance(const Graph& base, int u, int v,
                                   const std::vector<int>& path_lengths) {
    const int t = static_cast<int>(path_lengths.size());
    if (t <= 1) throw std::invalid_argument("at least two pendant clique paths required");
    if (u == v || u < 0 || v < 0 || u >= base.order() || v >= base.order())
        throw std::invalid_argument("bad vertex pair");
    for (int len : path_lengths)
        if (len < 1) throw std::invalid_argument("pendant path lengths must be positive");
    if (!base.has_edge(u, v)) throw std::invalid_argument("u and v must share a clique");
    if (!base.is_connected()) throw std::invalid_argument("base must be connected");

    // Degree hypothesis: both vertices live in one clique of order k and
    // carry no other base edges.
    const int k = base.degree(u) + 1;
    const std::uint64_t closed_u = base.row(u) | (1ull << u);
    const std::uint64_t closed_v = base.row(v) | (1ull << v);
    if (base.degree(v) != k - 1 || closed_u != closed_v)
        throw std::invalid_argument("degree hypothesis fails: u and v must close one clique of order k");
    std::uint64_t members = closed_u;
    while (members) {
        const int a = std::countr_zero(members);
        members &= members - 1;
        std::uint64_t rest = closed_u & ~(1ull << a);
        while (rest) {
            const int b = std::countr_zero(rest);
            rest &= rest - 1;
            if (a != b && !base.has_edge(a, b))
                throw std::invalid_argument("degree hypothesis fails: common neighborhood is not a clique");
        }
    }

    auto edges = graph_edges(base);
    int next_vertex = base.order();
    int first_bridge_entry = -1;
    for (int i = 0; i < t; ++i) {
        const PendantChain chain = append_chain(edges, next_vertex, u, k, path_lengths[static_cast<std::size_t>(i)]);
        if (i == 0) first_bridge_entry = chain.first_entry;
    }
    const Graph g = Graph::from_edges(next_vertex, edges);
    const Graph g_prime = g.without_edge(u, first_bridge_entry).with_edge(v, first_bridge_entry);

    RotationInstance instance;
    instance.g = g;
    instance.g_prime = g_prime;
    instance.labels = {{"u", u}, {"v", v}, {"u1", first_bridge_entry}};
    std::ostringstream desc;
    desc << t << " pendant clique paths of K_" << k << " at one clique vertex; first bridge moved "
         << "to its clique sibling";
    instance.description = desc.str();
    return instance;
}

RotationInstance build_L6_instance(const Graph& H, int hv, int k, int l, int p) {
    if (k < 2) throw std::invalid_argument("clique order must be at least 2");
    if (l < 0 || p < 1) throw std::invalid_argument("bad segment lengths");
    if (hv < 0 || hv >= H.order()) throw std::invalid_argument("attachment vertex out of range");
    if (!H.is_connected()) throw std::invalid_argument("H must be connected");
    if (H.order() == k && H.size() == k * (k - 1) / 2)
        throw std::invalid_argument("H must differ from the bare k-clique");
    if (is_cut_vertex(H, hv)) throw std::invalid_argument("attachment vertex must not be a cut vertex");

    // V0: lexicographically smallest k-clique of H containing hv.
    std::vector<int> v0;
    {
        std::vector<int> current;
        std::function<void(std::uint64_t)> extend = [&](std::uint64_t candidates) {
            if (static_cast<int>(current.size()) == k) {
                if (std::find(current.begin(), current.end(), hv) != current.end() &&
                    (v0.empty() || current < v0))
                    v0 = current;
                return;
            }
            std::uint64_t options = candidates;
            while (options) {
                const int w = std::countr_zero(options);
                options &= options - 1;
                current.push_back(w);
                extend(candidates & H.row(w) & ~((1ull << w) | ((1ull << w) - 1)));
                current.pop_back();
            }
        };
        extend(H.vertex_mask());
    }
    if (v0.empty())
        throw std::invalid_argument("attachment vertex is not inside any k-clique of H");

    // The tail lands on the V0 vertex carrying the most edges into the rest
    // of H (ties to the smallest index), matching the drawn construction
    // where V0 keeps its own connection into H.
    int v01 = -1;
    for (int w : v0) {
        if (w == hv) continue;
        if (v01 < 0 || H.degree(w) > H.degree(v01)) v01 = w;
    }

    auto edges = graph_edges(H);
    int next_vertex = H.order();
    const PendantChain chain = append_chain(edges, next_vertex, hv, k, l + p);
    const Graph g = Graph::from_edges(next_vertex, edges);

    int cut_from, cut_to;
    if (l >= 1) {
        cut_from = chain.exits[static_cast<std::size_t>(p - 1)];
        cut_to = chain.entries[static_cast<std::size_t>(p)];
    } else {
        // Degenerate tail: the whole pendant path moves, so the rotated edge
        // is the attachment bridge itself.
        cut_from = hv;
        cut_to = chain.entries.front();
    }
    const Graph g_prime = g.without_edge(cut_from, cut_to).with_edge(v01, cut_to);

    RotationInstance instance;
    instance.g = g;
    instance.g_prime = g_prime;
    instance.labels = {{"v01", v01}, {"v0k", hv}, {"vpk", cut_from}, {"vp+1_1", cut_to}};
    std::ostringstream desc;
    desc << "chain of " << l + p << " cliques K_" << k << " at vertex " << hv << "; tail of "
         << (l >= 1 ? l : l + p) << " re-attached inside the host clique at vertex " << v01;
    instance.description = desc.str();
    return instance;
}

RotationOutcome verify_rotation(const RotationInstance& instance, RotationDirection expected) {
    RotationOutcome outcome;
    outcome.lambda_g = spectral_radius(instance.g).lambda;
    outcome.lambda_g_prime = spectral_radius(instance.g_prime).lambda;
    outcome.margin = outcome.lambda_g_prime - outcome.lambda_g;

    const bool want_increase = expected == RotationDirection::Increase;
    outcome.pass = want_increase ? outcome.margin > kStrictMargin : outcome.margin < -kStrictMargin;

    if (std::abs(outcome.margin) < kExactFallback) {
        const CharPoly pg = char_poly_exact(instance.g);
        const CharPoly pgp = char_poly_exact(instance.g_prime);
        const RootOrder order =
            compare_largest_roots(pgp, outcome.lambda_g_prime, pg, outcome.lambda_g);
        outcome.exact_certified = true;
        outcome.pass = want_increase ? order == RootOrder::Greater : order == RootOrder::Less;
    }
    std::ostringstream details;
    details.precision(12);
    details << "lambda(G)=" << outcome.lambda_g << " lambda(G')=" << outcome.lambda_g_prime
            << " margin=" << outcome.margin;
    outcome.details = details.str();
    return outcome;
}

}  // namespace specex
