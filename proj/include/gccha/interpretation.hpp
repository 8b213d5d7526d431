#ifndef GCCHA_INTERPRETATION_HPP
#define GCCHA_INTERPRETATION_HPP

#include "gccha/canonical.hpp"
#include "gccha/estimation.hpp"
#include "gccha/types.hpp"

#include <utility>
#include <vector>

namespace gccha {

/// Per-(component, channel, frequency) coherence tables between canonical
/// and original signals, with the derived variance-explained summaries.
/// loadings_zx[i] is p x n, holding c_ij^ZX(lambda_l); cross tables pair a
/// canonical signal with the opposite set. signed_* tables carry
/// sign(Re p) * sqrt(c), the red/blue plotting convention.
struct LoadingsReport {
    std::vector<MatR> loadings_zx;   ///< r tables of p x n
    std::vector<MatR> loadings_wy;   ///< r tables of q x n
    std::vector<MatR> cross_loadings_zy;  ///< r tables of q x n
    std::vector<MatR> cross_loadings_wx;  ///< r tables of p x n
    std::vector<MatR> signed_zx;
    std::vector<MatR> signed_wy;
    std::vector<MatR> signed_zy;
    std::vector<MatR> signed_wx;
    MatR communality_x;  ///< p x n
    MatR communality_y;  ///< q x n
    MatR adequacy_z;     ///< r x n
    MatR adequacy_w;     ///< r x n
    MatR cumulative_z;   ///< r x n, nondecreasing down the component index
    MatR cumulative_w;   ///< r x n
};

/// Analytic loadings from the canonical filters and the spectral field:
/// p^ZX(lambda) = H(lambda) P_X(lambda), divided by the channel GPSD (the
/// canonical GPSD is 1 by normalization).
LoadingsReport loadings(const CanonicalSolution& sol, const SpectralMatrixField& field);

/// Column sums over components: communality of each original channel.
std::pair<MatR, MatR> communality(const LoadingsReport& rep);

struct AdequacyTables {
    MatR adequacy_z, adequacy_w;
    MatR cumulative_z, cumulative_w;
};

/// Channel averages per component and their cumulative sums.
AdequacyTables adequacy(const LoadingsReport& rep);

}  // namespace gccha

#endif
