#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "specex/canonical.hpp"
#include "specex/combinat.hpp"
#include "specex/graph.hpp"
#include "specex/graph6.hpp"
#include "oracles.hpp"

using namespace specex;

namespace {

Graph paw() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

Graph random_graph(int n, std::mt19937& rng) {
    std::bernoulli_distribution coin(0.5);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u)
            if (coin(rng)) edges.emplace_back(v, u);
    return Graph::from_edges(n, edges);
}

std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace

TEST_CASE("complete graph basics") {
    CHECK(complete_graph(1).order() == 1);
    CHECK(complete_graph(1).size() == 0);
    CHECK(complete_graph(4).size() == 6);
    CHECK(graph6_encode(complete_graph(3)) == "Bw");
    CHECK_THROWS_AS(complete_graph(0), std::invalid_argument);
    CHECK_THROWS_AS(complete_graph(65), std::invalid_argument);
}

TEST_CASE("turan union") {
    const Graph t63 = turan_union(6, 3);
    CHECK(t63.size() == 3);
    CHECK_FALSE(t63.is_connected());
    const Graph t52 = turan_union(5, 2);
    CHECK(t52.size() == 4);  // K3 + K2
    CHECK(independence_number(t63) == 3);
    CHECK_THROWS_AS(turan_union(3, 4), std::invalid_argument);
}

TEST_CASE("blowup constructions") {
    // Star tree on 3 nodes, K2 cliques, all bridges at the center vertex.
    CliqueTreeSpec star;
    star.alpha = 3;
    star.tree_edges = {{0, 1}, {0, 2}};
    star.sizes = {2, 2, 2};
    star.attachments = {{0, 0}, {0, 0}};
    CHECK(are_isomorphic(blowup(star), clique_star(6, 3)));

    CliqueTreeSpec two;
    two.alpha = 2;
    two.tree_edges = {{0, 1}};
    two.sizes = {3, 3};
    two.attachments = {{0, 0}};
    const Graph p62 = blowup(two);
    CHECK(p62.size() == 7);
    CHECK(are_isomorphic(p62, clique_path(6, 2)));

    // K2 blowup of the 3-node path is the 6-vertex path.
    CliqueTreeSpec path;
    path.alpha = 3;
    path.tree_edges = {{0, 1}, {1, 2}};
    path.sizes = {2, 2, 2};
    path.attachments = {{0, 0}, {1, 0}};
    CHECK(are_isomorphic(blowup(path), path_graph(6)));

    // Edge count identity: sum of clique edges plus one bridge per tree edge.
    CHECK(blowup(path).size() == 3 * 1 + 2);

    CliqueTreeSpec bad = path;
    bad.sizes = {3, 2, 2};  // sums to 7, but attachments/sizes stay balanced for n=7
    bad.tree_edges = {{0, 1}, {0, 2}};
    bad.attachments = {{0, 0}, {3, 0}};  // attachment outside clique 0
    CHECK_THROWS_AS(blowup(bad), std::invalid_argument);

    CliqueTreeSpec cyclic;
    cyclic.alpha = 3;
    cyclic.tree_edges = {{0, 1}, {0, 1}};
    cyclic.sizes = {2, 2, 2};
    cyclic.attachments = {{0, 0}, {0, 0}};
    CHECK_THROWS_AS(blowup(cyclic), std::invalid_argument);
}

TEST_CASE("clique path constructions") {
    CHECK(are_isomorphic(clique_path(6, 3), path_graph(6)));
    CHECK(are_isomorphic(clique_path(4, 2), path_graph(4)));
    CHECK(clique_path(6, 2).size() == 7);
    CHECK(are_isomorphic(clique_path(4, 2), clique_star(4, 2)));
    CHECK(clique_path(5, 1).size() == 10);  // K5
    CHECK_THROWS_AS(clique_path(3, 3), std::invalid_argument);  // unit cliques, alpha >= 3
    CHECK_THROWS_AS(clique_path(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(clique_star(4, 1), std::invalid_argument);

    // The balanced star on six vertices is the tree with one edge at the
    // center and two length-2 paths hanging from its first endpoint.
    const Graph star_tree =
        Graph::from_edges(6, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}});
    CHECK(are_isomorphic(clique_star(6, 3), star_tree));

    // Cut-vertex counts: 2*alpha - 2 for the path, alpha for the star (k >= 2).
    const Graph p93 = clique_path(9, 3);
    const Graph s93 = clique_star(9, 3);
    int path_cuts = 0, star_cuts = 0;
    for (int v = 0; v < 9; ++v) {
        path_cuts += is_cut_vertex(p93, v) ? 1 : 0;
        star_cuts += is_cut_vertex(s93, v) ? 1 : 0;
    }
    CHECK(path_cuts == 4);
    CHECK(star_cuts == 3);
}

TEST_CASE("unbalanced clique paths put large cliques at the leaves") {
    const Graph p73 = clique_path(7, 3);  // sizes 3,2,2 with the 3 at a leaf
    CHECK(p73.order() == 7);
    CHECK(independence_number(p73) == 3);
    CHECK(p73.is_connected());
}

TEST_CASE("complement") {
    const Graph k4 = complete_graph(4);
    const Graph empty = k4.complement();
    CHECK(empty.size() == 0);
    CHECK(are_isomorphic(empty.complement(), k4));
    const Graph c5 = cycle_graph(5);
    CHECK(are_isomorphic(c5.complement(), c5));
    const Graph m2 = turan_union(4, 2);  // two disjoint edges
    CHECK(are_isomorphic(m2.complement(), cycle_graph(4)));
    CHECK(m2.size() + m2.complement().size() == 6);
}

TEST_CASE("connectivity") {
    CHECK(path_graph(6).is_connected());
    CHECK_FALSE(turan_union(6, 3).is_connected());
    CHECK(Graph::empty(1).is_connected());
}

TEST_CASE("canonical labels identify isomorphism classes") {
    std::mt19937 rng(12345);

    // Two labelings of C5 agree.
    const Graph c5 = cycle_graph(5);
    const Graph shuffled = c5.permuted(random_permutation(5, rng));
    CHECK(canonical_label(c5) == canonical_label(shuffled));

    // Non-isomorphic trees differ.
    const Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_FALSE(canonical_label(path_graph(4)) == canonical_label(star));

    // Idempotence: canonicalizing a canonical graph is the identity.
    const Graph canon = canonical_graph(paw());
    const Graph twice = canonical_graph(canon);
    CHECK(canon == twice);
}

TEST_CASE("canonical labels are invariant over random relabelings") {
    std::mt19937 rng(99);
    for (int n : {5, 8, 10}) {
        const Graph g = random_graph(n, rng);
        const CanonicalForm reference = canonical_label(g);
        for (int trial = 0; trial < 100; ++trial) {
            const Graph relabeled = g.permuted(random_permutation(n, rng));
            CHECK(canonical_label(relabeled) == reference);
        }
    }
}

TEST_CASE("canonical keys induce the same classes as the all-permutation oracle") {
    // The two keys are different strings (the refinement search orders
    // vertices by color class first), but they must partition labeled graphs
    // into exactly the same isomorphism classes.
    for (int n = 2; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        std::map<std::vector<std::uint64_t>, std::set<std::vector<std::uint64_t>>> classes;
        for (std::uint64_t code = 0; code < (1ull << pairs); ++code) {
            std::vector<std::pair<int, int>> edges;
            int bit = 0;
            for (int v = 0; v < n; ++v)
                for (int u = v + 1; u < n; ++u, ++bit)
                    if ((code >> bit) & 1) edges.emplace_back(v, u);
            const Graph g = Graph::from_edges(n, edges);
            classes[oracle::brute_canonical_key(g)].insert(canonical_label(g).rows);
        }
        std::set<std::vector<std::uint64_t>> all_library_keys;
        for (const auto& [brute_key, library_keys] : classes) {
            CHECK(library_keys.size() == 1);  // one library key per oracle class
            all_library_keys.insert(*library_keys.begin());
        }
        CHECK(all_library_keys.size() == classes.size());  // and no collisions across classes
    }
    // Large twin cells stay cheap: a clique canonicalizes without branching.
    CHECK(canonical_label(complete_graph(12)).n == 12);
}

TEST_CASE("graph6 round trip and fixed encodings") {
    CHECK(graph6_encode(path_graph(2)) == "A_");
    CHECK(graph6_encode(Graph::empty(2)) == "A?");
    CHECK(are_isomorphic(graph6_decode("Bw"), complete_graph(3)));

    std::mt19937 rng(2024);
    for (int n = 1; n <= 10; ++n)
        for (int trial = 0; trial < 25; ++trial) {
            const Graph g = random_graph(n, rng);
            CHECK(graph6_decode(graph6_encode(g)) == g);
        }
}

TEST_CASE("graph6 malformed input") {
    CHECK_THROWS_AS(graph6_decode(""), std::invalid_argument);
    CHECK_THROWS_AS(graph6_decode("B"), std::invalid_argument);     // truncated bits
    CHECK_THROWS_AS(graph6_decode("B\x01"), std::invalid_argument); // byte below range
    CHECK_THROWS_AS(graph6_decode("~??"), std::invalid_argument);   // multi-byte size form
    CHECK_THROWS_AS(graph6_decode("Bww"), std::invalid_argument);   // trailing bytes
}
