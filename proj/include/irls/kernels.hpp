#pragma once

#include <span>
#include <vector>

#include "irls/graph.hpp"

namespace irls::kernels {

/// 1 / weighted_degree per node (0 for isolated nodes).
std::vector<double> inverse_degrees(const WeightedGraph& g);

/// One lazy random-walk step over the row-stochastic transition:
///   out[v] = laziness * p[v] + (1 - laziness) * sum_u p[u] w_uv / deg(u).
/// Each output entry is computed independently, so the parallel kernel is
/// bitwise identical to the serial reference for any thread count.
void lazy_walk_step(const WeightedGraph& g, std::span<const double> p,
                    std::span<const double> inv_degree, double laziness,
                    std::span<double> out);

/// Serial reference for the kernel above; kept for tests and benchmarks.
void lazy_walk_step_serial(const WeightedGraph& g, std::span<const double> p,
                           std::span<const double> inv_degree, double laziness,
                           std::span<double> out);

/// Probability mass after `steps` steps of the standard row-stochastic walk
/// (laziness 0) started at `start`.
std::vector<double> walk_mass(const WeightedGraph& g, int start, int steps);

}  // namespace irls::kernels
