#include "gccha/similarity.hpp"
#include "gccha/errors.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace gccha {

Graph build_similarity_graph(const MatR& features, const std::vector<int>& labels, bool bridge) {
    const Index n = features.rows();
    if (static_cast<Index>(labels.size()) != n)
        throw DimensionMismatch("build_similarity_graph: one label per row required");

    VecR norms(n);
    for (Index i = 0; i < n; ++i) {
        norms(i) = features.row(i).norm();
        if (norms(i) == 0.0)
            throw ZeroVectorImage("feature row " + std::to_string(i) + " is all zeros");
    }

    std::map<int, std::vector<Index>> by_label;
    for (Index i = 0; i < n; ++i) by_label[labels[static_cast<size_t>(i)]].push_back(i);

    std::vector<Edge> edges;
    for (const auto& [label, members] : by_label) {
        (void)label;
        for (size_t a = 0; a < members.size(); ++a) {
            for (size_t b = a + 1; b < members.size(); ++b) {
                const Index i = members[a];
                const Index j = members[b];
                double w = features.row(i).dot(features.row(j)) / (norms(i) * norms(j));
                w = std::clamp(w, 0.0, 1.0);
                if (w > 0.0) edges.push_back({i, j, w});
            }
        }
    }

    if (bridge && by_label.size() > 1) {
        auto it = by_label.begin();
        Index prev_anchor = *std::min_element(it->second.begin(), it->second.end());
        for (++it; it != by_label.end(); ++it) {
            const Index anchor = *std::min_element(it->second.begin(), it->second.end());
            edges.push_back({prev_anchor, anchor, 1e-6});
            prev_anchor = anchor;
        }
    }

    return build_graph(edges, n, false);
}

}  // namespace gccha
