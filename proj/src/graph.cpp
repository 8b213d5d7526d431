#include "gccha/graph.hpp"
#include "gccha/errors.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gccha {

namespace {

void check_connected(const MatR& w) {
    const Index n = w.rows();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<Index> stack = {0};
    seen[0] = 1;
    Index reached = 1;
    while (!stack.empty()) {
        Index u = stack.back();
        stack.pop_back();
        for (Index v = 0; v < n; ++v) {
            // Connectivity over the undirected support; directed graphs are
            // required to be weakly connected.
            if (!seen[static_cast<size_t>(v)] && (w(u, v) > 0.0 || w(v, u) > 0.0)) {
                seen[static_cast<size_t>(v)] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    if (reached != n) {
        throw DisconnectedGraph("graph is disconnected: reached " + std::to_string(reached) +
                                " of " + std::to_string(n) + " nodes");
    }
}

}  // namespace

Graph::Graph(std::vector<Edge> edges, Index node_count, bool directed)
    : node_count_(node_count), directed_(directed), edges_(std::move(edges)) {
    if (node_count_ <= 0) throw InvalidInput("node_count must be positive");

    weights_ = MatR::Zero(node_count_, node_count_);
    std::set<std::pair<Index, Index>> keys;
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    for (const Edge& e : edges_) {
        if (e.source < 0 || e.source >= node_count_ || e.target < 0 || e.target >= node_count_)
            throw InvalidInput("edge (" + std::to_string(e.source) + "," + std::to_string(e.target) +
                               ") out of range for n=" + std::to_string(node_count_));
        if (e.source == e.target)
            throw SelfLoop("self-loop at node " + std::to_string(e.source));
        if (e.weight < 0.0)
            throw NegativeWeight("negative weight on edge (" + std::to_string(e.source) + "," +
                                 std::to_string(e.target) + ")");
        std::pair<Index, Index> key =
            directed_ ? std::make_pair(e.source, e.target)
                      : std::make_pair(std::min(e.source, e.target), std::max(e.source, e.target));
        if (!keys.insert(key).second)
            throw DuplicateEdge("duplicate edge (" + std::to_string(e.source) + "," +
                                std::to_string(e.target) + ")");
        if (e.weight == 0.0) continue;  // no connection
        kept.push_back(e);
        weights_(e.source, e.target) = e.weight;
        if (!directed_) weights_(e.target, e.source) = e.weight;
    }
    edges_ = std::move(kept);
    check_connected(weights_);
}

Graph build_graph(const std::vector<Edge>& edges, Index node_count, bool directed) {
    return Graph(edges, node_count, directed);
}

}  // namespace gccha
