#include "irls/kernels.hpp"

#include <cassert>

namespace irls::kernels {

std::vector<double> inverse_degrees(const WeightedGraph& g) {
    std::vector<double> inv(static_cast<size_t>(g.node_count()), 0.0);
    for (int v = 0; v < g.node_count(); ++v) {
        double d = g.weighted_degree(v);
        if (d > 0.0) inv[static_cast<size_t>(v)] = 1.0 / d;
    }
    return inv;
}

namespace {

inline double gather(const WeightedGraph& g, std::span<const double> p,
                     std::span<const double> inv_degree, double laziness, int v) {
    double acc = 0.0;
    for (const auto& nb : g.neighbors(v))
        acc += p[static_cast<size_t>(nb.node)] * nb.weight *
               inv_degree[static_cast<size_t>(nb.node)];
    return laziness * p[static_cast<size_t>(v)] + (1.0 - laziness) * acc;
}

}  // namespace

void lazy_walk_step(const WeightedGraph& g, std::span<const double> p,
                    std::span<const double> inv_degree, double laziness,
                    std::span<double> out) {
    assert(p.size() == out.size());
    const int n = g.node_count();
#pragma omp parallel for schedule(static)
    for (int v = 0; v < n; ++v)
        out[static_cast<size_t>(v)] = gather(g, p, inv_degree, laziness, v);
}

void lazy_walk_step_serial(const WeightedGraph& g, std::span<const double> p,
                           std::span<const double> inv_degree, double laziness,
                           std::span<double> out) {
    assert(p.size() == out.size());
    const int n = g.node_count();
    for (int v = 0; v < n; ++v)
        out[static_cast<size_t>(v)] = gather(g, p, inv_degree, laziness, v);
}

std::vector<double> walk_mass(const WeightedGraph& g, int start, int steps) {
    const size_t n = static_cast<size_t>(g.node_count());
    std::vector<double> p(n, 0.0), next(n, 0.0);
    p[static_cast<size_t>(start)] = 1.0;
    auto inv = inverse_degrees(g);
    for (int s = 0; s < steps; ++s) {
        lazy_walk_step(g, p, inv, 0.0, next);
        p.swap(next);
    }
    return p;
}

}  // namespace irls::kernels
