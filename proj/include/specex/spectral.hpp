#pragma once

#include <vector>

#include "specex/graph.hpp"

namespace specex {

struct PowerIterationOptions {
    double residual_tol = 1e-10;
    long max_iterations = 1'000'000;
};

struct ComponentSpectrum {
    std::vector<int> vertices;
    double lambda = 0.0;
    double residual = 0.0;
    long iterations = 0;
};

struct SpectralResult {
    double lambda = 0.0;      // max over components
    std::vector<double> perron;  // unit within each component, strictly positive there
    double residual = 0.0;    // max over components
    long iterations = 0;      // total
    bool connected = false;
    std::vector<ComponentSpectrum> components;
};

/// Dominant adjacency eigenvalue per connected component via power iteration
/// on A + I with the all-ones start vector; the shift removes the bipartite
/// +/-lambda oscillation. Throws std::runtime_error if the iteration cap is
/// reached before the residual tolerance (a tolerance/cap misconfiguration,
/// not a mathematical failure).
SpectralResult spectral_radius(const Graph& g, const PowerIterationOptions& opt = {});

}  // namespace specex
