#include "specex/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "specex/canonical.hpp"
#include "specex/charpoly.hpp"
#include "specex/graph6.hpp"
#include "specex/spectral.hpp"

namespace specex {

namespace {

constexpr double kTieWindow = 1e-7;

bool hypothesis_k_bound_holds(int k, int alpha) {
    // k > (17*alpha + 15) / 8, compared exactly.
    return 8 * k > 17 * alpha + 15;
}

}  // namespace

ExtremalReport search_extremal(int n, int alpha, Objective objective, Family family,
                               const EnumerationOptions& opt) {
    if (alpha < 1 || alpha > n) throw std::invalid_argument("search_extremal requires 1 <= alpha <= n");
    ExtremalReport report;
    report.n = n;
    report.alpha = alpha;
    report.k = n % alpha == 0 ? n / alpha : 0;
    report.t = n % alpha;
    report.objective = objective;
    report.family = family;
    report.predicted_name = objective == Objective::Min ? "clique_path" : "clique_star";

    try {
        Graph predicted = objective == Objective::Min ? clique_path(n, alpha) : clique_star(n, alpha);
        report.predicted_graph6 = graph6_encode(canonical_graph(predicted));
    } catch (const std::invalid_argument&) {
        // No balanced construction for these parameters; prediction stays empty.
    }

    std::vector<Graph> graphs =
        family == Family::G ? family_G(n, alpha, opt) : family_T(n, alpha);
    report.graphs_tested = graphs.size();
    if (graphs.empty()) {
        report.vacuous = true;
        report.note = "family is empty for these parameters";
        return report;
    }

    const auto lambdas = scan::map_ordered<double>(
        graphs.size(), [&](std::size_t i) { return spectral_radius(graphs[i]).lambda; },
        opt.scan);

    const bool minimizing = objective == Objective::Min;
    double opt_lambda = lambdas[0];
    for (double l : lambdas) opt_lambda = minimizing ? std::min(opt_lambda, l) : std::max(opt_lambda, l);

    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        if (std::abs(lambdas[i] - opt_lambda) <= kTieWindow) candidates.push_back(i);

    // Exact certification: group near-ties by characteristic polynomial and
    // order the groups by exact largest-root comparison.
    std::map<std::vector<BigInt>, std::vector<std::size_t>> groups;
    for (std::size_t i : candidates) groups[char_poly_exact(graphs[i]).coeffs].push_back(i);

    std::vector<std::size_t> winners;
    CharPoly best_poly;
    double best_lambda = 0.0;
    for (auto& [coeffs, members] : groups) {
        CharPoly poly{coeffs};
        const double lambda = lambdas[members.front()];
        if (winners.empty()) {
            winners = members;
            best_poly = poly;
            best_lambda = lambda;
            continue;
        }
        RootOrder order = compare_largest_roots(poly, lambda, best_poly, best_lambda);
        const bool better = minimizing ? order == RootOrder::Less : order == RootOrder::Greater;
        if (better) {
            winners = members;
            best_poly = poly;
            best_lambda = lambda;
        } else if (order == RootOrder::Equal) {
            winners.insert(winners.end(), members.begin(), members.end());
        }
    }
    std::sort(winners.begin(), winners.end());

    report.optimum_lambda = best_lambda;
    for (std::size_t i : winners) report.attainers.push_back(graph6_encode(graphs[i]));
    report.unique = report.attainers.size() == 1;

    // Cospectral tie: distinct optimal graphs sharing one exact polynomial.
    for (auto& [coeffs, members] : groups)
        if (members.size() > 1 &&
            std::includes(winners.begin(), winners.end(), members.begin(), members.end()))
            report.cospectral_tie = true;

    report.matches_prediction = report.unique && !report.predicted_graph6.empty() &&
                                report.attainers.front() == report.predicted_graph6;
    if (!report.matches_prediction && !report.attainers.empty())
        report.witness_counterexample = report.attainers.front();

    if (family == Family::G) {
        if (objective == Objective::Min) {
            report.outside_guaranteed_regime =
                report.k == 0 || !hypothesis_k_bound_holds(report.k, alpha);
            if (report.outside_guaranteed_regime)
                report.note = "k below the guarantee threshold for the minimum characterization; "
                              "outcome reported empirically";
        } else {
            report.outside_guaranteed_regime = true;
            report.note = "maximum taken over every connected graph with this independence "
                          "number; the construction argument manipulates graphs partitioned "
                          "into balanced cliques, so disagreement here is reported, not resolved";
        }
    }
    return report;
}

}  // namespace specex
