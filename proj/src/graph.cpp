#include "irls/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "irls/errors.hpp"

namespace irls {

NodeSet::NodeSet(std::vector<int> xs) : members(std::move(xs)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool NodeSet::contains(int v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

NodeSet set_intersection(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_intersection(a.members.begin(), a.members.end(),
                          b.members.begin(), b.members.end(),
                          std::back_inserter(out.members));
    return out;
}

int Layer::covered_count() const {
    int total = 0;
    for (const auto& c : communities) total += c.size();
    return total;
}

WeightedGraph WeightedGraph::from_edges(
    std::vector<std::string> labels,
    const std::vector<std::tuple<int, int, double>>& edges) {
    WeightedGraph g;
    g.labels_ = std::move(labels);
    const int n = static_cast<int>(g.labels_.size());
    g.index_of_.reserve(g.labels_.size());
    for (int i = 0; i < n; ++i) {
        auto [it, fresh] = g.index_of_.emplace(g.labels_[i], i);
        (void)it;
        if (!fresh) throw ParseError("duplicate node label '" + g.labels_[i] + "'");
    }
    g.adjacency_.resize(g.labels_.size());
    for (const auto& [u, v, w] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw OutOfRange("edge endpoint");
        if (u == v) throw SelfLoop(g.labels_[u]);
        if (!(w > 0.0) || !std::isfinite(w)) throw BadWeight(g.labels_[u] + " " + g.labels_[v]);
        g.adjacency_[u].push_back({v, w});
        g.adjacency_[v].push_back({u, w});
        g.total_weight_ += w;
        ++g.edge_count_;
    }
    for (int v = 0; v < n; ++v) {
        auto& adj = g.adjacency_[v];
        std::sort(adj.begin(), adj.end(),
                  [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
        for (size_t i = 1; i < adj.size(); ++i)
            if (adj[i].node == adj[i - 1].node)
                throw DuplicateEdge(g.labels_[v] + " " + g.labels_[adj[i].node]);
    }
    return g;
}

std::span<const Neighbor> WeightedGraph::neighbors(int v) const {
    check_node(v);
    return adjacency_[v];
}

double WeightedGraph::weighted_degree(int v) const {
    check_node(v);
    double d = 0.0;
    for (const auto& nb : adjacency_[v]) d += nb.weight;
    return d;
}

int WeightedGraph::degree(int v) const {
    check_node(v);
    return static_cast<int>(adjacency_[v].size());
}

namespace {
template <class Vec>
auto find_neighbor(Vec& adj, int v) {
    auto it = std::lower_bound(adj.begin(), adj.end(), v,
                               [](const Neighbor& nb, int x) { return nb.node < x; });
    return (it != adj.end() && it->node == v) ? it : adj.end();
}
}  // namespace

double WeightedGraph::edge_weight(int u, int v) const {
    check_node(u);
    check_node(v);
    auto it = find_neighbor(adjacency_[u], v);
    return it == adjacency_[u].end() ? 0.0 : it->weight;
}

bool WeightedGraph::has_edge(int u, int v) const { return edge_weight(u, v) > 0.0; }

void WeightedGraph::set_edge_weight(int u, int v, double w) {
    check_node(u);
    check_node(v);
    if (!(w > 0.0) || !std::isfinite(w)) throw BadWeight(labels_[u] + " " + labels_[v]);
    auto ituv = find_neighbor(adjacency_[u], v);
    auto itvu = find_neighbor(adjacency_[v], u);
    if (ituv == adjacency_[u].end() || itvu == adjacency_[v].end())
        throw OutOfRange("set_edge_weight on a missing edge");
    total_weight_ += w - ituv->weight;
    ituv->weight = w;
    itvu->weight = w;
}

void WeightedGraph::remove_edge(int u, int v) {
    check_node(u);
    check_node(v);
    auto ituv = find_neighbor(adjacency_[u], v);
    auto itvu = find_neighbor(adjacency_[v], u);
    if (ituv == adjacency_[u].end() || itvu == adjacency_[v].end())
        throw OutOfRange("remove_edge on a missing edge");
    total_weight_ -= ituv->weight;
    --edge_count_;
    adjacency_[u].erase(ituv);
    adjacency_[v].erase(itvu);
}

const std::string& WeightedGraph::label(int v) const {
    check_node(v);
    return labels_[v];
}

std::optional<int> WeightedGraph::index_of(const std::string& label) const {
    auto it = index_of_.find(label);
    if (it == index_of_.end()) return std::nullopt;
    return it->second;
}

double WeightedGraph::recompute_total_weight() const {
    double sum = 0.0;
    for (const auto& adj : adjacency_)
        for (const auto& nb : adj) sum += nb.weight;
    return sum / 2.0;
}

void WeightedGraph::check_node(int v) const {
    if (v < 0 || v >= node_count()) throw OutOfRange("node index " + std::to_string(v));
}

WeightedGraph load_edge_list(std::istream& in) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    std::vector<std::tuple<int, int, double>> edges;
    std::unordered_map<uint64_t, bool> seen;

    auto intern = [&](const std::string& s) {
        auto it = index.find(s);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(labels.size());
        labels.push_back(s);
        index.emplace(s, id);
        return id;
    };

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, c, extra;
        if (!(ls >> a)) continue;  // blank or comment-only line
        if (!(ls >> b)) throw ParseError("line " + std::to_string(lineno) + ": expected two tokens");
        double w = 1.0;
        if (ls >> c) {
            try {
                size_t pos = 0;
                w = std::stod(c, &pos);
                if (pos != c.size()) throw std::invalid_argument(c);
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(lineno) + ": bad weight '" + c + "'");
            }
            if (ls >> extra)
                throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
        }
        if (a == b) throw SelfLoop("line " + std::to_string(lineno) + ": " + a);
        if (!(w > 0.0) || !std::isfinite(w))
            throw BadWeight("line " + std::to_string(lineno) + ": " + c);
        int u = intern(a);
        int v = intern(b);
        uint64_t key = (static_cast<uint64_t>(std::min(u, v)) << 32) |
                       static_cast<uint64_t>(std::max(u, v));
        if (!seen.emplace(key, true).second)
            throw DuplicateEdge("line " + std::to_string(lineno) + ": " + a + " " + b);
        edges.emplace_back(u, v, w);
    }
    return WeightedGraph::from_edges(std::move(labels), edges);
}

WeightedGraph load_edge_list_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    return load_edge_list(f);
}

void write_edge_list(const WeightedGraph& g, std::ostream& out) {
    struct Line {
        std::string a, b;
        double w;
    };
    std::vector<Line> lines;
    lines.reserve(static_cast<size_t>(g.edge_count()));
    for (int u = 0; u < g.node_count(); ++u) {
        for (const auto& nb : g.neighbors(u)) {
            if (nb.node <= u) continue;
            const std::string& la = g.label(u);
            const std::string& lb = g.label(nb.node);
            if (la <= lb)
                lines.push_back({la, lb, nb.weight});
            else
                lines.push_back({lb, la, nb.weight});
        }
    }
    std::sort(lines.begin(), lines.end(), [](const Line& x, const Line& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    out << std::setprecision(17);
    for (const auto& l : lines) out << l.a << ' ' << l.b << ' ' << l.w << '\n';
}

void write_edge_list_file(const WeightedGraph& g, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "' for writing");
    write_edge_list(g, f);
}

SubgraphResult induced_subgraph(const WeightedGraph& g, const NodeSet& nodes) {
    SubgraphResult result;
    result.to_original = nodes.members;
    std::vector<int> to_local(static_cast<size_t>(g.node_count()), -1);
    std::vector<std::string> labels;
    labels.reserve(nodes.members.size());
    for (size_t i = 0; i < nodes.members.size(); ++i) {
        int orig = nodes.members[i];
        if (orig < 0 || orig >= g.node_count()) throw OutOfRange("subgraph node");
        to_local[static_cast<size_t>(orig)] = static_cast<int>(i);
        labels.push_back(g.label(orig));
    }
    std::vector<std::tuple<int, int, double>> edges;
    for (int local_u = 0; local_u < static_cast<int>(nodes.members.size()); ++local_u) {
        int orig_u = nodes.members[static_cast<size_t>(local_u)];
        for (const auto& nb : g.neighbors(orig_u)) {
            if (nb.node <= orig_u) continue;
            int local_v = to_local[static_cast<size_t>(nb.node)];
            if (local_v >= 0) edges.emplace_back(local_u, local_v, nb.weight);
        }
    }
    result.graph = WeightedGraph::from_edges(std::move(labels), edges);
    return result;
}

}  // namespace irls
