#ifndef GCCHA_SOLVE_HPP
#define GCCHA_SOLVE_HPP

#include "gccha/basis.hpp"
#include "gccha/estimation.hpp"
#include "gccha/filter.hpp"
#include "gccha/types.hpp"

#include <vector>

namespace gccha {

struct SolveOptions {
    /// Relative eigenvalue floor for spectral matrix inverses and square
    /// roots, matching the estimator's ridge default.
    double eig_floor = 1e-8;
    bool with_tau = true;
};

/// Canonical solution at one graph frequency. Columns of h_vectors /
/// f_vectors are the coefficient vectors h_i / f_i, normalized to unit
/// quadratic form h_i^H P_X h_i = f_i^H P_Y f_i = 1; the filter-response
/// rows are their adjoints.
struct FrequencySolution {
    Complex frequency{0.0, 0.0};
    VecR coherences;  ///< gamma_1 >= ... >= gamma_r >= 0
    MatC h_vectors;   ///< p x r
    MatC f_vectors;   ///< q x r
    VecR tau;         ///< all q eigenvalues of P_YX P_X^-1 P_XY, descending
};

/// Maximal-coherence pairs at a single frequency: eigenpairs of the
/// whitened Hermitian matrix P_Y^-1/2 P_YX P_X^-1 P_XY P_Y^-1/2.
FrequencySolution solve_frequency(const MatC& p_x, const MatC& p_y, const MatC& p_xy, Index r,
                                  const SolveOptions& opts = {});

/// Same solve reading the field's native (real or complex) storage.
FrequencySolution solve_field_frequency(const SpectralMatrixField& field, Index l, Index r,
                                        const SolveOptions& opts = {});

/// Constrained-minimization route: rows of H come from the left and rows of
/// F from the right singular vectors of the whitened cross matrix
/// P_X^-1/2 P_XY P_Y^-1/2, computed by SVD. Kept distinct from
/// solve_frequency's eigendecomposition so the two can cross-check each
/// other.
struct Thm32Solution {
    FilterBank h_bank;  ///< r x p per frequency
    FilterBank f_bank;  ///< r x q per frequency
    MatR gammas;        ///< r x n squared singular values
};
Thm32Solution solve_thm32(const SpectralMatrixField& field, Index r,
                          const SolveOptions& opts = {});

/// Rank-r linear predictor of Y from X minimizing total spectral MSE
/// (weighted = false) or the P_Y^-1/2-weighted criterion (weighted = true).
struct ReducedRankPredictor {
    FilterBank a_bank;       ///< q x p per frequency
    FilterBank g_bank;       ///< q x r
    FilterBank h_bank;       ///< r x p
    std::vector<VecC> mu;    ///< q offset vectors of length n
    double min_mse = 0.0;    ///< value of the minimized criterion
    bool weighted = false;
};
ReducedRankPredictor reduced_rank_predictor(const SpectralMatrixField& field,
                                            const SpectralBasis& b, const MatC& means_x,
                                            const MatC& means_y, Index r, bool weighted = false,
                                            const SolveOptions& opts = {});

}  // namespace gccha

#endif
