#ifndef GCCHA_SIMILARITY_HPP
#define GCCHA_SIMILARITY_HPP

#include "gccha/graph.hpp"
#include "gccha/types.hpp"

#include <vector>

namespace gccha {

/// Label-similarity graph over feature rows: nodes sharing a label are
/// connected with cosine-similarity weights clamped to [0, 1]; zero-weight
/// edges are dropped. The per-label construction leaves one component per
/// label, so with bridge = true consecutive label components are joined by
/// weight-1e-6 edges between their lowest-index nodes to keep the graph
/// connected.
Graph build_similarity_graph(const MatR& features, const std::vector<int>& labels,
                             bool bridge = true);

}  // namespace gccha

#endif
