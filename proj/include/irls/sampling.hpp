#pragma once

#include <vector>

#include "irls/graph.hpp"

namespace irls {

struct SamplingParams {
    int bfs_steps = 3;
    // Minimum fraction of a frontier node's edge weight that must point into
    // the already-admitted set (applies from the second ring outwards).
    double inward_threshold = 0.1;
    int max_nodes = 10000;
    int walk_steps = 3;
};

struct SampleResult {
    WeightedGraph subgraph;
    std::vector<int> to_original;  // local -> original index
    int seed_local = 0;
};

/// Seed-centred subgraph: BFS with inward-ratio filtering, then random-walk
/// trimming when the admitted set exceeds max_nodes. The seed and its full
/// 1-hop neighborhood are always kept.
SampleResult bfs_sample(const WeightedGraph& g, int seed, const SamplingParams& params);

/// Nodes with the largest probability mass after a short standard random walk
/// from `seed`; the seed itself is always kept. Ties break by ascending index.
NodeSet random_walk_trim(const WeightedGraph& g_s, int seed, int max_nodes, int walk_steps);

}  // namespace irls
