#include "irls/sampling.hpp"

#include <algorithm>

#include "irls/errors.hpp"
#include "irls/kernels.hpp"

namespace irls {

namespace {

std::vector<int> top_by_mass(const std::vector<double>& mass,
                             const std::vector<int>& candidates, size_t count) {
    std::vector<int> order = candidates;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        double ma = mass[static_cast<size_t>(a)];
        double mb = mass[static_cast<size_t>(b)];
        if (ma != mb) return ma > mb;
        return a < b;
    });
    order.resize(std::min(count, order.size()));
    return order;
}

}  // namespace

NodeSet random_walk_trim(const WeightedGraph& g_s, int seed, int max_nodes, int walk_steps) {
    const int n = g_s.node_count();
    if (max_nodes >= n) {
        std::vector<int> all(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) all[static_cast<size_t>(v)] = v;
        return NodeSet(std::move(all));
    }
    auto mass = kernels::walk_mass(g_s, seed, walk_steps);
    std::vector<int> nodes(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) nodes[static_cast<size_t>(v)] = v;
    auto kept = top_by_mass(mass, nodes, static_cast<size_t>(max_nodes));
    if (std::find(kept.begin(), kept.end(), seed) == kept.end()) {
        kept.back() = seed;
    }
    return NodeSet(std::move(kept));
}

SampleResult bfs_sample(const WeightedGraph& g, int seed, const SamplingParams& params) {
    if (seed < 0 || seed >= g.node_count()) throw OutOfRange("seed index");
    if (g.degree(seed) == 0) throw IsolatedSeed(g.label(seed));

    const size_t n = static_cast<size_t>(g.node_count());
    std::vector<char> admitted(n, 0), visited(n, 0);
    admitted[static_cast<size_t>(seed)] = 1;
    visited[static_cast<size_t>(seed)] = 1;
    std::vector<int> admitted_list{seed};

    // Ring 1: the whole neighborhood is kept unconditionally.
    std::vector<int> ring;
    for (const auto& nb : g.neighbors(seed)) {
        admitted[static_cast<size_t>(nb.node)] = 1;
        visited[static_cast<size_t>(nb.node)] = 1;
        ring.push_back(nb.node);
    }
    admitted_list.insert(admitted_list.end(), ring.begin(), ring.end());

    // Rings >= 2: admit a frontier node only when the fraction of its edge
    // weight pointing into the admitted set reaches the threshold. The
    // admitted set grows during the sweep (ascending node order).
    for (int step = 2; step <= params.bfs_steps; ++step) {
        std::vector<int> frontier;
        for (int u : ring)
            for (const auto& nb : g.neighbors(u))
                if (!visited[static_cast<size_t>(nb.node)]) {
                    visited[static_cast<size_t>(nb.node)] = 1;
                    frontier.push_back(nb.node);
                }
        std::sort(frontier.begin(), frontier.end());
        std::vector<int> next_ring;
        for (int v : frontier) {
            double total = 0.0, inward = 0.0;
            for (const auto& nb : g.neighbors(v)) {
                total += nb.weight;
                if (admitted[static_cast<size_t>(nb.node)]) inward += nb.weight;
            }
            if (total <= 0.0) continue;
            if (inward / total >= params.inward_threshold) {
                admitted[static_cast<size_t>(v)] = 1;
                next_ring.push_back(v);
            }
        }
        admitted_list.insert(admitted_list.end(), next_ring.begin(), next_ring.end());
        ring = std::move(next_ring);
        if (ring.empty()) break;
    }

    std::vector<int> kept = admitted_list;
    if (static_cast<int>(kept.size()) > params.max_nodes) {
        auto sub = induced_subgraph(g, NodeSet(kept));
        int seed_local = static_cast<int>(
            std::lower_bound(sub.to_original.begin(), sub.to_original.end(), seed) -
            sub.to_original.begin());
        auto local_mass = kernels::walk_mass(sub.graph, seed_local, params.walk_steps);
        std::vector<double> mass(n, 0.0);
        for (size_t i = 0; i < sub.to_original.size(); ++i)
            mass[static_cast<size_t>(sub.to_original[i])] = local_mass[i];

        // Seed and its neighborhood are forced; remaining slots go to the
        // highest-mass nodes.
        std::vector<char> forced(n, 0);
        forced[static_cast<size_t>(seed)] = 1;
        std::vector<int> forced_list{seed};
        for (const auto& nb : g.neighbors(seed)) {
            forced[static_cast<size_t>(nb.node)] = 1;
            forced_list.push_back(nb.node);
        }
        std::vector<int> rest;
        for (int v : kept)
            if (!forced[static_cast<size_t>(v)]) rest.push_back(v);
        size_t slots = params.max_nodes > static_cast<int>(forced_list.size())
                           ? static_cast<size_t>(params.max_nodes) - forced_list.size()
                           : 0;
        auto taken = top_by_mass(mass, rest, slots);
        kept = forced_list;
        kept.insert(kept.end(), taken.begin(), taken.end());
    }

    SampleResult result;
    auto sub = induced_subgraph(g, NodeSet(std::move(kept)));
    result.subgraph = std::move(sub.graph);
    result.to_original = std::move(sub.to_original);
    result.seed_local = static_cast<int>(
        std::lower_bound(result.to_original.begin(), result.to_original.end(), seed) -
        result.to_original.begin());
    return result;
}

}  // namespace irls
