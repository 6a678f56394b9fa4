#include "specex/walks.hpp"

#include <cmath>
#include <stdexcept>

#include "specex/spectral.hpp"

namespace specex {

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

Matrix adjacency_matrix(const Graph& g) {
    const int n = g.order();
    Matrix a(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n), 0));
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (g.has_edge(u, v)) a[v][u] = 1;
    return a;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix out(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < n; ++t) {
            if (a[i][t] == 0) continue;
            const BigInt& f = a[i][t];
            for (std::size_t j = 0; j < n; ++j)
                if (b[t][j] != 0) out[i][j] += f * b[t][j];
        }
    return out;
}

}  // namespace

BigInt closed_walks(const Graph& g, int v, int s) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
    if (s < 1) throw std::invalid_argument("walk length must be positive");

    Matrix base = adjacency_matrix(g);
    Matrix acc;
    bool have_acc = false;
    int e = s;
    while (e > 0) {
        if (e & 1) {
            acc = have_acc ? multiply(acc, base) : base;
            have_acc = true;
        }
        e >>= 1;
        if (e > 0) base = multiply(base, base);
    }
    return acc[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)];
}

WalkRatioReport walk_ratio_check(const Graph& g, int vi, int vj, int s_max) {
    if (vi == vj) throw std::invalid_argument("walk_ratio_check needs two distinct vertices");
    if (vi < 0 || vj < 0 || vi >= g.order() || vj >= g.order())
        throw std::invalid_argument("vertex out of range");
    if (s_max < 1) throw std::invalid_argument("s_max must be positive");
    if (!g.is_connected()) throw std::invalid_argument("walk_ratio_check requires a connected graph");
    if (g.is_bipartite())
        throw std::invalid_argument("walk_ratio_check requires a non-bipartite graph");

    WalkRatioReport report;
    report.vi = vi;
    report.vj = vj;
    report.s_max = s_max;

    const Matrix a = adjacency_matrix(g);
    Matrix power = a;
    BigInt last_i = 0, last_j = 0;
    for (int s = 1; s <= s_max; ++s) {
        if (s > 1) power = multiply(power, a);
        const BigInt& wi = power[static_cast<std::size_t>(vi)][static_cast<std::size_t>(vi)];
        const BigInt& wj = power[static_cast<std::size_t>(vj)][static_cast<std::size_t>(vj)];
        if (wj > 0) report.trace.push_back({s, wi, wj});
        if (s == s_max) {
            last_i = wi;
            last_j = wj;
        }
    }
    if (last_j == 0) throw std::runtime_error("zero closed-walk count at s_max");

    report.final_ratio = static_cast<double>(BigRational(last_i, last_j));

    const SpectralResult spec = spectral_radius(g);
    report.perron_i = spec.perron[static_cast<std::size_t>(vi)];
    report.perron_j = spec.perron[static_cast<std::size_t>(vj)];
    report.perron_ratio_sq =
        (report.perron_i * report.perron_i) / (report.perron_j * report.perron_j);
    report.convergence_gap = std::abs(report.final_ratio - report.perron_ratio_sq);

    const double ratio_tol = 1e-6, perron_tol = 1e-9;
    const bool limit_at_least_one = report.final_ratio >= 1.0 - ratio_tol;
    const bool limit_below_one = report.final_ratio <= 1.0 + ratio_tol;
    report.direction_matches =
        (limit_at_least_one && report.perron_i >= report.perron_j - perron_tol) ||
        (limit_below_one && report.perron_i <= report.perron_j + perron_tol);
    return report;
}

}  // namespace specex
