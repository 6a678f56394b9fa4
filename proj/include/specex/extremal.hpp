#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specex/enumerate.hpp"
#include "specex/graph.hpp"

namespace specex {

enum class Objective { Min, Max };
enum class Family { G, T };

struct ExtremalReport {
    int n = 0;
    int alpha = 0;
    int k = 0;  // n / alpha when integral, else 0
    int t = 0;  // n mod alpha
    Objective objective = Objective::Min;
    Family family = Family::G;
    double optimum_lambda = 0.0;
    std::vector<std::string> attainers;  // canonical graph6, every class within the exact tie
    bool unique = false;
    bool matches_prediction = false;
    std::string predicted_name;     // "clique_path" (min) or "clique_star" (max)
    std::string predicted_graph6;   // empty when the construction is undefined
    std::optional<std::string> witness_counterexample;
    bool cospectral_tie = false;
    bool outside_guaranteed_regime = false;
    std::string note;
    std::size_t graphs_tested = 0;
    bool vacuous = false;
};

/// Scans the family stream for the extreme spectral radius. Candidates within
/// 1e-7 of the floating optimum are re-certified by exact characteristic
/// polynomials: identical polynomials are reported as a cospectral tie,
/// distinct ones are ordered by exact largest-root comparison.
ExtremalReport search_extremal(int n, int alpha, Objective objective, Family family,
                               const EnumerationOptions& opt = {});

}  // namespace specex
