#include <doctest.h>

#include <set>

#include "specex/canonical.hpp"
#include "specex/combinat.hpp"
#include "specex/enumerate.hpp"
#include "specex/graph6.hpp"
#include "oracles.hpp"

using namespace specex;

namespace {

std::set<std::string> graph6_set(const std::vector<Graph>& graphs) {
    std::set<std::string> out;
    for (const Graph& g : graphs) out.insert(graph6_encode(g));
    return out;
}

}  // namespace

TEST_CASE("class counts match the labeled brute-force oracle") {
    const int expected_all[] = {0, 1, 2, 4, 11, 34, 156};
    const int expected_connected[] = {0, 1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        const auto counts = oracle::labeled_class_counts(n);
        CHECK(counts.all == expected_all[n]);
        CHECK(counts.connected == expected_connected[n]);
        CHECK(static_cast<int>(all_graphs(n).size()) == counts.all);
        CHECK(static_cast<int>(connected_graphs(n).size()) == counts.connected);
    }
}

TEST_CASE("class counts match the cycle-index oracle up to n = 8") {
    // The cycle-index count and its Euler peel-off are independent of every
    // graph data structure; they also cross-check the labeled oracle below 7.
    const auto connected = oracle::connected_counts_from_all(8);
    for (int n = 1; n <= 6; ++n) {
        const auto brute = oracle::labeled_class_counts(n);
        CHECK(oracle::burnside_graph_count(n) == brute.all);
        CHECK(connected[static_cast<std::size_t>(n)] == brute.connected);
    }
    for (int n = 7; n <= 8; ++n) {
        CHECK(BigInt(all_graphs(n).size()) == oracle::burnside_graph_count(n));
        CHECK(BigInt(connected_graphs(n).size()) == connected[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("stream elements are canonical and pairwise distinct") {
    for (int n : {5, 6, 7}) {
        const auto graphs = all_graphs(n);
        std::set<std::string> keys;
        for (const Graph& g : graphs) {
            CHECK(canonical_graph(g) == g);
            keys.insert(graph6_encode(g));
        }
        CHECK(keys.size() == graphs.size());
    }
}

TEST_CASE("deterministic enumeration order") {
    const auto first = all_graphs(6);
    const auto second = all_graphs(6);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);

    EnumerationOptions serial;
    serial.scan.parallel = false;
    const auto reference = all_graphs(6, serial);
    REQUIRE(reference.size() == first.size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == reference[i]);
}

TEST_CASE("enumeration cap") {
    EnumerationOptions opt;
    opt.max_n = 5;
    CHECK_THROWS_AS(all_graphs(6, opt), std::invalid_argument);
}

TEST_CASE("connected family with fixed independence number") {
    const auto set42 = graph6_set(family_G(4, 2));
    CHECK(set42.size() == 4);
    CHECK(set42.count(graph6_encode(canonical_graph(path_graph(4)))) == 1);
    CHECK(set42.count(graph6_encode(canonical_graph(cycle_graph(4)))) == 1);
    const Graph paw = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    const Graph diamond = complete_graph(4).without_edge(0, 1);
    CHECK(set42.count(graph6_encode(canonical_graph(paw))) == 1);
    CHECK(set42.count(graph6_encode(canonical_graph(diamond))) == 1);
    CHECK(set42.count(graph6_encode(canonical_graph(complete_graph(4)))) == 0);

    for (int n = 2; n <= 6; ++n) {
        const auto family = family_G(n, 1);
        REQUIRE(family.size() == 1);
        CHECK(are_isomorphic(family.front(), complete_graph(n)));
    }
    CHECK(graph6_set(family_G(6, 3)).count(graph6_encode(canonical_graph(path_graph(6)))) == 1);
}

TEST_CASE("tree generation") {
    const int tree_counts[] = {0, 1, 1, 1, 2, 3, 6, 11};
    for (int alpha = 1; alpha <= 7; ++alpha)
        CHECK(static_cast<int>(all_trees(alpha).size()) == tree_counts[alpha]);

    // Independent route: trees on n vertices are the connected classes with
    // n-1 edges.
    for (int n = 2; n <= 6; ++n) {
        int count = 0;
        for (const Graph& g : connected_graphs(n))
            if (g.size() == n - 1) ++count;
        CHECK(count == static_cast<int>(all_trees(n).size()));
    }
}

TEST_CASE("tree blowup family") {
    const auto t63 = family_T(6, 3);
    REQUIRE(t63.size() == 2);
    CHECK(graph6_set(t63).count(graph6_encode(canonical_graph(path_graph(6)))) == 1);
    CHECK(graph6_set(t63).count(graph6_encode(canonical_graph(clique_star(6, 3)))) == 1);

    const auto t62 = family_T(6, 2);
    REQUIRE(t62.size() == 1);
    CHECK(are_isomorphic(t62.front(), clique_path(6, 2)));

    for (const auto& [n, alpha] : {std::pair{6, 3}, {8, 4}, {8, 2}, {9, 3}}) {
        const auto family = family_T(n, alpha);
        const auto keys = graph6_set(family);
        CHECK(keys.count(graph6_encode(canonical_graph(clique_path(n, alpha)))) == 1);
        CHECK(keys.count(graph6_encode(canonical_graph(clique_star(n, alpha)))) == 1);
        for (const Graph& g : family) {
            CHECK(g.is_connected());
            CHECK(independence_number(g) == alpha);
            // Vertex and edge counts follow the blowup identities.
            CHECK(g.order() == n);
        }
    }
}

TEST_CASE("graph6 round trip over every enumerated graph") {
    for (int n = 1; n <= 8; ++n)
        for (const Graph& g : all_graphs(n))
            CHECK(graph6_decode(graph6_encode(g)) == g);
}

TEST_CASE("blowup counting identities over whole attachment orbits") {
    // Vertex count is the size sum; edge count adds one bridge per tree edge
    // to the clique edges.
    for (int alpha = 2; alpha <= 4; ++alpha)
        for (const Graph& tree : all_trees(alpha))
            for (int k = 2; k <= 3; ++k) {
                CliqueTreeSpec spec;
                spec.alpha = alpha;
                spec.tree_edges = tree.edges();
                spec.sizes.assign(static_cast<std::size_t>(alpha), k);
                spec.attachments.assign(spec.tree_edges.size(), {0, 0});
                const Graph g = blowup(spec);
                CHECK(g.order() == k * alpha);
                CHECK(g.size() == alpha * k * (k - 1) / 2 + (alpha - 1));
                CHECK(g.is_connected());
            }
}
