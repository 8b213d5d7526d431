#ifndef GCCHA_SYNTH_HPP
#define GCCHA_SYNTH_HPP

#include "gccha/basis.hpp"
#include "gccha/signal.hpp"
#include "gccha/solve.hpp"
#include "gccha/types.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace gccha {

/// Prescription for a weakly stationary (X, Y) process: a joint Hermitian
/// PSD spectral matrix at every graph frequency, plus optional per-dimension
/// means, each proportional to some basis vector.
struct SynthesisSpec {
    SpectralBasis basis;
    std::vector<MatC> joint_field;  ///< n matrices of size (p+q) x (p+q)
    Index x_dim = 1;                ///< p; the remaining dimensions are Y
    Index realizations = 1;
    std::uint64_t seed = 0;
    MatC means_x;  ///< n x p, may be empty
    MatC means_y;  ///< n x q, may be empty
};

/// Draws independent spectral coefficients with the prescribed per-frequency
/// covariance and inverse-transforms them, so the population cross-
/// covariances satisfy Sigma_ij = V diag(p_ij) V^H exactly. Real-compatible
/// specs (real basis, real field, real means) produce real signals.
std::pair<MultivariateGraphSignal, MultivariateGraphSignal> synthesize_stationary(
    const SynthesisSpec& spec);

/// Independent brute-force canonical solve: general (non-Hermitian)
/// eigendecomposition of P_X^-1 P_XY P_Y^-1 P_YX and its mirror, with LU
/// inverses. Shares no factorization path with solve_frequency.
struct CcaOracleResult {
    VecR gamma;  ///< min(p,q) values, descending
    MatC h;      ///< p x min(p,q), columns normalized to h^H P_X h = 1
    MatC f;      ///< q x min(p,q)
};
CcaOracleResult cca_oracle(const MatC& p_x, const MatC& p_y, const MatC& p_xy);

/// Monte Carlo mean of sum_i ||Y_i - mu_i - sum_j A_ij X_j||^2 over the
/// given realizations.
double empirical_mse(const ReducedRankPredictor& pred, const SpectralBasis& b,
                     const MultivariateGraphSignal& x, const MultivariateGraphSignal& y);

}  // namespace gccha

#endif
