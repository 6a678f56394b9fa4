#include "specex/spectral.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace specex {

namespace {

std::vector<std::uint64_t> component_masks(const Graph& g) {
    std::vector<std::uint64_t> out;
    std::uint64_t remaining = g.vertex_mask();
    while (remaining) {
        int start = std::countr_zero(remaining);
        std::uint64_t seen = 1ull << start, frontier = seen;
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

ComponentSpectrum iterate_component(const Graph& g, std::uint64_t mask,
                                    const PowerIterationOptions& opt,
                                    std::vector<double>& perron_out) {
    ComponentSpectrum comp;
    std::uint64_t bits = mask;
    while (bits) {
        comp.vertices.push_back(std::countr_zero(bits));
        bits &= bits - 1;
    }
    const std::size_t c = comp.vertices.size();
    if (c == 1) {  // isolated vertex: lambda = 0, trivial Perron
        perron_out[comp.vertices[0]] = 1.0;
        return comp;
    }

    std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < c; ++i) pos[comp.vertices[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> nbrs(c);
    for (std::size_t i = 0; i < c; ++i) {
        std::uint64_t nb = g.row(comp.vertices[i]);
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            nbrs[i].push_back(pos[u]);
        }
    }

    std::vector<double> x(c, 1.0 / std::sqrt(static_cast<double>(c)));
    std::vector<double> ax(c);
    for (long it = 0; it <= opt.max_iterations; ++it) {
        double rayleigh = 0.0;
        for (std::size_t i = 0; i < c; ++i) {
            double s = 0.0;
            for (int j : nbrs[i]) s += x[j];
            ax[i] = s;
            rayleigh += s * x[i];
        }
        double residual = 0.0;
        for (std::size_t i = 0; i < c; ++i)
            residual = std::max(residual, std::abs(ax[i] - rayleigh * x[i]));
        if (residual <= opt.residual_tol) {
            comp.lambda = rayleigh;
            comp.residual = residual;
            comp.iterations = it;
            for (std::size_t i = 0; i < c; ++i) perron_out[comp.vertices[i]] = x[i];
            return comp;
        }
        double norm2 = 0.0;
        for (std::size_t i = 0; i < c; ++i) {
            ax[i] += x[i];  // (A + I) x
            norm2 += ax[i] * ax[i];
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t i = 0; i < c; ++i) x[i] = ax[i] * inv;
    }
    throw std::runtime_error("power iteration did not reach the residual tolerance within the cap");
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, const PowerIterationOptions& opt) {
    if (g.order() < 1) throw std::invalid_argument("spectral_radius needs a nonempty graph");
    SpectralResult result;
    result.perron.assign(static_cast<std::size_t>(g.order()), 0.0);

    const auto masks = component_masks(g);
    result.connected = masks.size() == 1;
    for (std::uint64_t mask : masks) {
        ComponentSpectrum comp = iterate_component(g, mask, opt, result.perron);
        result.lambda = std::max(result.lambda, comp.lambda);
        result.residual = std::max(result.residual, comp.residual);
        result.iterations += comp.iterations;
        result.components.push_back(std::move(comp));
    }
    return result;
}

}  // namespace specex
