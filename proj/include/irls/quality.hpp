#pragma once

#include <span>
#include <vector>

#include "irls/graph.hpp"

namespace irls {

/// Interior density p and background noise density q of a community.
struct DensityPair {
    double interior;    // p
    double background;  // q
};

/// Q(C) = (w_Cin/w_G - (w_C / 2w_G)^2) / n_C with w_C the degree sum
/// 2*w_Cin + w_Cout.
double weighted_local_modularity(const WeightedGraph& g, const NodeSet& c);

/// Q of every prefix of `order` up to `limit` nodes, computed incrementally.
std::vector<double> prefix_modularity_scan(const WeightedGraph& g,
                                           std::span<const int> order, int limit);

/// Q'(L) = sum over communities of (w_Cin/w_G - (w_C / 2w_G)^2); nodes not
/// covered by the layer contribute nothing.
double partition_modularity(const WeightedGraph& g, const Layer& layer);

/// p = w_Cin / (n_C(n_C-1)/2), q = w_Cout / (n_C (n - n_C)).
/// Requires 2 <= n_C <= n-1.
DensityPair community_densities(const WeightedGraph& g, const NodeSet& c);

double f1_score(const NodeSet& detected, const NodeSet& truth);

}  // namespace irls
