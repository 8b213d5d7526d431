#include "gccha/knn.hpp"
#include "gccha/errors.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gccha {

std::vector<int> knn_classify(const MatR& features, const std::vector<int>& labels, int k) {
    const Index n = features.rows();
    if (static_cast<Index>(labels.size()) != n)
        throw DimensionMismatch("knn_classify: one label per row required");
    if (k < 1 || k >= n)
        throw KTooLarge("knn_classify: k must satisfy 1 <= k < N (k=" + std::to_string(k) +
                        ", N=" + std::to_string(n) + ")");

    std::vector<int> predicted(static_cast<size_t>(n));
    std::vector<std::pair<double, Index>> dist(static_cast<size_t>(n - 1));
    for (Index i = 0; i < n; ++i) {
        size_t slot = 0;
        for (Index j = 0; j < n; ++j) {
            if (j == i) continue;
            dist[slot++] = {(features.row(i) - features.row(j)).squaredNorm(), j};
        }
        std::partial_sort(dist.begin(), dist.begin() + k, dist.end());

        std::map<int, int> votes;
        for (int t = 0; t < k; ++t)
            votes[labels[static_cast<size_t>(dist[static_cast<size_t>(t)].second)]] += 1;
        // Vote ties go to the smaller label; the map iterates labels in
        // ascending order, so the first maximum wins.
        int best_label = 0;
        int best_count = -1;
        for (const auto& [label, count] : votes) {
            if (count > best_count) {
                best_label = label;
                best_count = count;
            }
        }
        predicted[static_cast<size_t>(i)] = best_label;
    }
    return predicted;
}

}  // namespace gccha
