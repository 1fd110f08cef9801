#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace irls {

/// Set of node indices, stored sorted and duplicate-free.
struct NodeSet {
    std::vector<int> members;

    NodeSet() = default;
    explicit NodeSet(std::vector<int> xs);  // sorts and dedups

    int size() const { return static_cast<int>(members.size()); }
    bool empty() const { return members.empty(); }
    bool contains(int v) const;

    auto begin() const { return members.begin(); }
    auto end() const { return members.end(); }

    bool operator==(const NodeSet&) const = default;
};

NodeSet set_intersection(const NodeSet& a, const NodeSet& b);

/// A partition-like collection of disjoint, non-empty communities.
struct Layer {
    std::vector<NodeSet> communities;

    int community_count() const { return static_cast<int>(communities.size()); }
    int covered_count() const;
};

struct Neighbor {
    int node;
    double weight;
};

/// Undirected weighted graph over dense indices with an external label map.
/// Weights are strictly positive; no self-loops, no parallel edges. Immutable
/// for readers once built; weight reduction mutates an owned copy.
class WeightedGraph {
public:
    WeightedGraph() = default;

    // Trusted path: labels define the index order; edges are (u, v, w) over
    // indices. Validates symmetry-free invariants (no dups, loops, w > 0).
    static WeightedGraph from_edges(std::vector<std::string> labels,
                                    const std::vector<std::tuple<int, int, double>>& edges);

    int node_count() const { return static_cast<int>(adjacency_.size()); }
    double total_edge_weight() const { return total_weight_; }
    int edge_count() const { return edge_count_; }

    std::span<const Neighbor> neighbors(int v) const;
    double weighted_degree(int v) const;
    int degree(int v) const;

    // 0 when the edge is absent
    double edge_weight(int u, int v) const;
    bool has_edge(int u, int v) const;

    // Both endpoints must already be joined by an edge.
    void set_edge_weight(int u, int v, double w);
    void remove_edge(int u, int v);

    const std::string& label(int v) const;
    std::optional<int> index_of(const std::string& label) const;

    double recompute_total_weight() const;

private:
    void check_node(int v) const;
    std::vector<std::vector<Neighbor>> adjacency_;  // each sorted by node id
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_of_;
    double total_weight_ = 0.0;
    int edge_count_ = 0;
};

/// Parses `u v [w]` lines; `#` starts a comment. Labels are arbitrary
/// whitespace-free strings mapped to dense indices in first-appearance order.
WeightedGraph load_edge_list(std::istream& in);
WeightedGraph load_edge_list_file(const std::string& path);

/// Emits one `u v w` line per edge, sorted by (min-label, max-label) so the
/// output is byte-stable.
void write_edge_list(const WeightedGraph& g, std::ostream& out);
void write_edge_list_file(const WeightedGraph& g, const std::string& path);

struct SubgraphResult {
    WeightedGraph graph;
    std::vector<int> to_original;  // local index -> index in the source graph
};

SubgraphResult induced_subgraph(const WeightedGraph& g, const NodeSet& nodes);

}  // namespace irls
