#include <doctest.h>

#include <cmath>

#include "specex/charpoly.hpp"
#include "specex/enumerate.hpp"
#include "specex/graph.hpp"
#include "specex/spectral.hpp"
#include "specex/walks.hpp"
#include "oracles.hpp"

using namespace specex;

namespace {

Graph paw() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

}  // namespace

TEST_CASE("spectral radius of named graphs") {
    for (int k = 2; k <= 12; ++k)
        CHECK(std::abs(spectral_radius(complete_graph(k)).lambda - (k - 1)) <= 1e-10);
    CHECK(std::abs(spectral_radius(cycle_graph(6)).lambda - 2.0) <= 1e-10);
    CHECK(std::abs(spectral_radius(path_graph(6)).lambda - 2.0 * std::cos(M_PI / 7)) <= 1e-9);
    CHECK(std::abs(spectral_radius(clique_path(6, 2)).lambda - (1.0 + std::sqrt(2.0))) <= 1e-9);
    CHECK(std::abs(spectral_radius(clique_star(6, 3)).lambda - std::sqrt(2.0 + std::sqrt(3.0))) <= 1e-9);
    const SpectralResult one = spectral_radius(Graph::empty(1));
    CHECK(one.lambda == 0.0);
    CHECK(one.perron[0] == 1.0);
}

TEST_CASE("power iteration agrees with the dense eigensolver") {
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : connected_graphs(n)) {
            const SpectralResult spec = spectral_radius(g);
            CHECK(spec.residual <= 1e-10);
            CHECK(std::abs(spec.lambda - oracle::eigen_lambda_max(g)) <= 1e-9);
        }
}

TEST_CASE("spectral bounds over enumerated graphs") {
    for (int n = 2; n <= 8; ++n)
        for (const Graph& g : connected_graphs(n)) {
            const double lambda = spectral_radius(g).lambda;
            CHECK(lambda >= 2.0 * g.size() / g.order() - 1e-9);
            CHECK(lambda <= n - 1 + 1e-9);
            const bool complete = g.size() == n * (n - 1) / 2;
            CHECK((lambda >= n - 1 - 1e-9) == complete);
        }
}

TEST_CASE("perron entries are positive on connected graphs") {
    for (const Graph& g : connected_graphs(6)) {
        if (g.size() == 0) continue;
        for (double entry : spectral_radius(g).perron) CHECK(entry > 0.0);
    }
}

TEST_CASE("disconnected graphs take the component maximum") {
    const Graph g = turan_union(10, 3);  // K4 + K3 + K3
    const SpectralResult spec = spectral_radius(g);
    CHECK(spec.components.size() == 3);
    CHECK(std::abs(spec.lambda - 3.0) <= 1e-10);
    CHECK_FALSE(spec.connected);
    CHECK(std::abs(spectral_radius(turan_union(6, 3)).lambda - 1.0) <= 1e-10);
}

TEST_CASE("adding an edge strictly increases the spectral radius") {
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : connected_graphs(n)) {
            const double base = spectral_radius(g).lambda;
            for (int v = 0; v < n; ++v)
                for (int u = v + 1; u < n; ++u) {
                    if (g.has_edge(u, v)) continue;
                    CHECK(spectral_radius(g.with_edge(u, v)).lambda > base + 1e-9);
                }
        }
}

TEST_CASE("exact characteristic polynomials") {
    const CharPoly k3 = char_poly_exact(complete_graph(3));
    CHECK(k3.to_string() == "x^3 - 3x - 2");

    const CharPoly single = char_poly_exact(Graph::empty(1));
    CHECK(single.to_string() == "x");

    // Two triangles joined by an edge: divisible by x^4 - 2x^3 - 4x^2 + 6x + 3,
    // whose largest root is 1 + sqrt(2).
    const CharPoly p62 = char_poly_exact(clique_path(6, 2));
    const std::vector<long long> factor = {3, 6, -4, -2, 1};
    // Exact synthetic division of p62 by the quartic factor.
    std::vector<BigInt> rem(p62.coeffs);
    std::vector<BigInt> quotient(3, 0);
    for (int i = 6; i >= 4; --i) {
        BigInt q = rem[static_cast<std::size_t>(i)];
        quotient[static_cast<std::size_t>(i - 4)] = q;
        for (int j = 0; j <= 4; ++j)
            rem[static_cast<std::size_t>(i - 4 + j)] -= q * factor[static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < 4; ++i) CHECK(rem[static_cast<std::size_t>(i)] == 0);
}

TEST_CASE("characteristic polynomial coefficient identities") {
    for (int n = 2; n <= 8; ++n)
        for (const Graph& g : all_graphs(n)) {
            const CharPoly p = char_poly_exact(g);
            CHECK(p.coeffs[static_cast<std::size_t>(n)] == 1);
            CHECK(p.coeffs[static_cast<std::size_t>(n - 1)] == 0);
            CHECK(p.coeffs[static_cast<std::size_t>(n - 2)] == -g.size());
            // |p(lambda)| is consistent with the floating residual.
            const double lambda = spectral_radius(g).lambda;
            CHECK(std::abs(evaluate(p, lambda)) <= 1e-6 * std::pow(n + 1.0, n));
        }
    CHECK_THROWS_AS(char_poly_exact(Graph::empty(17)), std::invalid_argument);
}

TEST_CASE("exact root comparison orders near values") {
    const CharPoly p = char_poly_exact(path_graph(6));
    const CharPoly q = char_poly_exact(cycle_graph(6));
    const double lp = spectral_radius(path_graph(6)).lambda;
    const double lq = spectral_radius(cycle_graph(6)).lambda;
    CHECK(compare_largest_roots(p, lp, q, lq) == RootOrder::Less);
    CHECK(compare_largest_roots(q, lq, p, lp) == RootOrder::Greater);
    CHECK(compare_largest_roots(p, lp, p, lp) == RootOrder::Equal);
    CHECK(count_roots_above(q, 2, 1) == 0);
    CHECK(count_roots_above(q, 1, 1) == 1);
    CHECK(evaluate_scaled(q, 2, 1) == 0);
}

TEST_CASE("closed walk counts") {
    for (const Graph& g : {paw(), cycle_graph(5), complete_graph(4)})
        for (int v = 0; v < g.order(); ++v)
            CHECK(closed_walks(g, v, 2) == g.degree(v));
    CHECK(closed_walks(complete_graph(3), 0, 3) == 2);
    CHECK(closed_walks(cycle_graph(4), 0, 3) == 0);
}

TEST_CASE("closed walks match the naive cubic oracle") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : all_graphs(n))
            for (int s = 1; s <= 10; ++s)
                for (int v = 0; v < n; ++v)
                    CHECK(closed_walks(g, v, s) == oracle::naive_closed_walks(g, v, s));
}

TEST_CASE("walk ratios track the squared Perron ratio") {
    const Graph g = paw();  // triangle 0,1,2 with pendant 3 on 2
    const WalkRatioReport cd = walk_ratio_check(g, 2, 3, 120);
    CHECK(cd.direction_matches);
    CHECK(cd.final_ratio > 1.0);
    CHECK(cd.perron_i > cd.perron_j);
    CHECK(cd.convergence_gap <= 1e-6);

    const WalkRatioReport ab = walk_ratio_check(g, 0, 1, 120);
    CHECK(ab.direction_matches);
    CHECK(std::abs(ab.final_ratio - 1.0) <= 1e-9);

    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            if (i == j) continue;
            const WalkRatioReport rim = walk_ratio_check(cycle_graph(5), i, j, 60);
            CHECK(rim.direction_matches);
            CHECK(std::abs(rim.final_ratio - 1.0) <= 1e-9);
        }

    CHECK_THROWS_AS(walk_ratio_check(cycle_graph(4), 0, 1, 50), std::invalid_argument);
    CHECK_THROWS_AS(walk_ratio_check(turan_union(6, 2), 0, 1, 50), std::invalid_argument);
}

TEST_CASE("perron entries agree on automorphic vertices of blowups") {
    for (const Graph& g : {clique_path(8, 2), clique_path(6, 3), clique_star(6, 3), clique_star(8, 4)}) {
        const SpectralResult spec = spectral_radius(g);
        for (const auto& orbit : oracle::automorphism_orbits(g))
            for (std::size_t i = 1; i < orbit.size(); ++i)
                CHECK(std::abs(spec.perron[static_cast<std::size_t>(orbit[i])] -
                               spec.perron[static_cast<std::size_t>(orbit[0])]) <= 1e-9);
    }
}
