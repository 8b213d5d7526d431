#ifndef GCCHA_GRAPH_HPP
#define GCCHA_GRAPH_HPP

#include "gccha/types.hpp"

#include <vector>

namespace gccha {

struct Edge {
    Index source = 0;
    Index target = 0;
    double weight = 1.0;
};

/// Finite simple weighted graph, connected by construction. Undirected
/// graphs keep a symmetric weight matrix; an edge given once as (i, j)
/// counts as both directions.
class Graph {
public:
    Graph(std::vector<Edge> edges, Index node_count, bool directed);

    Index node_count() const { return node_count_; }
    bool directed() const { return directed_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// n x n weighted adjacency matrix W; symmetric when undirected.
    const MatR& weights() const { return weights_; }

    /// Row sums of W.
    VecR degrees() const { return weights_.rowwise().sum(); }

private:
    Index node_count_;
    bool directed_;
    std::vector<Edge> edges_;
    MatR weights_;
};

/// Validates indices, weights, simplicity and connectivity.
/// Zero-weight edges are dropped (a zero weight means "no connection").
Graph build_graph(const std::vector<Edge>& edges, Index node_count, bool directed = false);

}  // namespace gccha

#endif
