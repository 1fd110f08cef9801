#include "irls/quality.hpp"

#include <algorithm>

#include "irls/errors.hpp"

namespace irls {

namespace {

// (w_Cin, w_C = degree sum) for a community given a membership mask.
std::pair<double, double> community_weights(const WeightedGraph& g,
                                            std::span<const int> members,
                                            const std::vector<char>& in_c) {
    double internal = 0.0;
    double degree_sum = 0.0;
    for (int v : members) {
        for (const auto& nb : g.neighbors(v)) {
            degree_sum += nb.weight;
            if (in_c[static_cast<size_t>(nb.node)] && nb.node > v) internal += nb.weight;
        }
    }
    return {internal, degree_sum};
}

}  // namespace

double weighted_local_modularity(const WeightedGraph& g, const NodeSet& c) {
    if (c.empty()) throw EmptySet("weighted_local_modularity");
    const double w_g = g.total_edge_weight();
    if (!(w_g > 0.0)) throw NoEdges("weighted_local_modularity");
    std::vector<char> in_c(static_cast<size_t>(g.node_count()), 0);
    for (int v : c) in_c[static_cast<size_t>(v)] = 1;
    auto [internal, degree_sum] = community_weights(g, c.members, in_c);
    double q = internal / w_g - (degree_sum / (2.0 * w_g)) * (degree_sum / (2.0 * w_g));
    return q / static_cast<double>(c.size());
}

std::vector<double> prefix_modularity_scan(const WeightedGraph& g,
                                           std::span<const int> order, int limit) {
    const double w_g = g.total_edge_weight();
    if (!(w_g > 0.0)) throw NoEdges("prefix_modularity_scan");
    limit = std::min<int>(limit, static_cast<int>(order.size()));
    std::vector<double> out;
    out.reserve(static_cast<size_t>(std::max(limit, 0)));
    std::vector<char> in_c(static_cast<size_t>(g.node_count()), 0);
    double internal = 0.0;
    double degree_sum = 0.0;
    for (int j = 0; j < limit; ++j) {
        int v = order[static_cast<size_t>(j)];
        if (in_c[static_cast<size_t>(v)]) throw OutOfRange("duplicate node in prefix order");
        for (const auto& nb : g.neighbors(v)) {
            degree_sum += nb.weight;
            if (in_c[static_cast<size_t>(nb.node)]) internal += nb.weight;
        }
        in_c[static_cast<size_t>(v)] = 1;
        double q = internal / w_g - (degree_sum / (2.0 * w_g)) * (degree_sum / (2.0 * w_g));
        out.push_back(q / static_cast<double>(j + 1));
    }
    return out;
}

double partition_modularity(const WeightedGraph& g, const Layer& layer) {
    const double w_g = g.total_edge_weight();
    if (!(w_g > 0.0)) throw NoEdges("partition_modularity");
    std::vector<char> in_c(static_cast<size_t>(g.node_count()), 0);
    double total = 0.0;
    for (const auto& c : layer.communities) {
        for (int v : c) in_c[static_cast<size_t>(v)] = 1;
        auto [internal, degree_sum] = community_weights(g, c.members, in_c);
        total += internal / w_g - (degree_sum / (2.0 * w_g)) * (degree_sum / (2.0 * w_g));
        for (int v : c) in_c[static_cast<size_t>(v)] = 0;
    }
    return total;
}

DensityPair community_densities(const WeightedGraph& g, const NodeSet& c) {
    const int n = g.node_count();
    const int n_c = c.size();
    if (n_c < 2 || n_c >= n) throw DegenerateCommunity("n_C=" + std::to_string(n_c));
    std::vector<char> in_c(static_cast<size_t>(n), 0);
    for (int v : c) in_c[static_cast<size_t>(v)] = 1;
    auto [internal, degree_sum] = community_weights(g, c.members, in_c);
    double outgoing = degree_sum - 2.0 * internal;
    double p = internal / (0.5 * n_c * (n_c - 1.0));
    double q = outgoing / (static_cast<double>(n_c) * (n - n_c));
    return {p, q};
}

double f1_score(const NodeSet& detected, const NodeSet& truth) {
    if (detected.empty() || truth.empty()) return 0.0;
    const int overlap = set_intersection(detected, truth).size();
    if (overlap == 0) return 0.0;
    double precision = static_cast<double>(overlap) / detected.size();
    double recall = static_cast<double>(overlap) / truth.size();
    return 2.0 * precision * recall / (precision + recall);
}

}  // namespace irls
