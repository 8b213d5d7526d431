#ifndef GCCHA_CANONICAL_HPP
#define GCCHA_CANONICAL_HPP

#include "gccha/estimation.hpp"
#include "gccha/filter.hpp"
#include "gccha/signal.hpp"
#include "gccha/solve.hpp"

#include <vector>

namespace gccha {

/// Full gCChA output: canonical filter banks, canonical graph signals,
/// per-pair coherence curves and mean offsets.
struct CanonicalSolution {
    FilterBank h_bank;       ///< r x p responses per frequency
    FilterBank f_bank;       ///< r x q
    MultivariateGraphSignal z;
    MultivariateGraphSignal w;
    MatR coherence_curves;   ///< r x n, gamma_i(lambda_l)
    std::vector<VecC> mu;    ///< r offset vectors of length n
    VecC frequencies;
};

/// Runs the per-frequency canonical solves, aligns phases across adjacent
/// frequencies, and filters X and Y into the canonical signals Z and W.
/// r = 0 selects the default rank min(p, q). Mean tables (n x p / n x q) are
/// optional; when absent the offsets are zero.
CanonicalSolution run_gccha(const MultivariateGraphSignal& x, const MultivariateGraphSignal& y,
                            const SpectralBasis& b, const SpectralMatrixField& field, Index r = 0,
                            const MatC& means_x = MatC(), const MatC& means_y = MatC(),
                            const SolveOptions& opts = SolveOptions{1e-8, false});

}  // namespace gccha

#endif
