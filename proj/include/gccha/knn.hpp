#ifndef GCCHA_KNN_HPP
#define GCCHA_KNN_HPP

#include "gccha/types.hpp"

#include <vector>

namespace gccha {

/// Leave-one-out k-nearest-neighbor prediction with the Euclidean metric.
/// Neighbors tie-break on (distance, index); votes tie-break on the smaller
/// label, then the smaller mean neighbor distance.
std::vector<int> knn_classify(const MatR& features, const std::vector<int>& labels, int k);

}  // namespace gccha

#endif
