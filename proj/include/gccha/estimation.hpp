#ifndef GCCHA_ESTIMATION_HPP
#define GCCHA_ESTIMATION_HPP

#include "gccha/basis.hpp"
#include "gccha/signal.hpp"
#include "gccha/types.hpp"

#include <cstdint>
#include <vector>

namespace gccha {

enum class EstimatorMode { RealizationAverage, RandomWindow };

struct EstimatorConfig {
    EstimatorMode mode = EstimatorMode::RealizationAverage;
    int window_count = 50;       ///< number of random windows, window 0 is all-ones
    std::uint64_t seed = 0;
    double ridge = 1e-8;         ///< diagonal loading, relative to tr(P)/dim
    bool center = true;
    /// Boxcar half-width for averaging the estimated joint matrices over
    /// neighboring frequencies (0 = no smoothing). Windowing a single
    /// realization smears spectra across frequencies anyway; explicit
    /// smoothing trades frequency resolution for a full-rank, stable field.
    Index smoothing_bandwidth = 0;
};

/// Per-frequency spectral matrices of the joint (X, Y) process. The full
/// (p+q) x (p+q) joint matrix is stored once per frequency (real storage when
/// every input was real); P_YX is derived on read as P_XY^H.
class SpectralMatrixField {
public:
    SpectralMatrixField(VecC frequencies, std::vector<MatC> joint, Index x_dim, Index y_dim);
    SpectralMatrixField(VecC frequencies, std::vector<MatR> joint, Index x_dim, Index y_dim);

    Index frequency_count() const { return frequencies_.size(); }
    Index x_dim() const { return x_dim_; }
    Index y_dim() const { return y_dim_; }
    bool is_real() const { return is_real_; }
    const VecC& frequencies() const { return frequencies_; }

    MatC joint(Index l) const;
    MatC P_X(Index l) const;
    MatC P_Y(Index l) const;
    MatC P_XY(Index l) const;
    MatC P_YX(Index l) const;

    const MatR& joint_real(Index l) const { return joint_r_.at(static_cast<size_t>(l)); }
    const MatC& joint_complex(Index l) const { return joint_c_.at(static_cast<size_t>(l)); }

private:
    VecC frequencies_;
    std::vector<MatC> joint_c_;
    std::vector<MatR> joint_r_;
    Index x_dim_;
    Index y_dim_;
    bool is_real_;
};

/// Entry l is (v_l^H x)(v_l^H y)^*; equal to diag(V^H x y^H V).
VecC cross_periodogram(const SpectralBasis& b, const VecC& x, const VecC& y);

/// Average of cross-periodograms over realizations (columns of xi, xj).
/// With cfg.center the per-node sample mean is removed first and the
/// unbiased M/(M-1) scaling applied; centering requires M >= 2.
VecC realization_average_csd(const SpectralBasis& b, const MatC& xi, const MatC& xj,
                             const EstimatorConfig& cfg);

/// Windowed average cross-periodogram over cfg.window_count random windows.
/// Window 0 is all-ones; windows 1.. are i.i.d. Rademacher masks drawn from
/// per-(seed, window) substreams, so the result is deterministic.
VecC windowed_average_csd(const SpectralBasis& b, const VecC& x, const VecC& y,
                          const EstimatorConfig& cfg);

/// Assembles all pairwise CSDs of (X, Y) into per-frequency joint matrices,
/// projects the diagonal blocks to PSD, and adds diagonal loading
/// ridge * tr(P)/dim to a block whenever its smallest eigenvalue falls below
/// that level.
SpectralMatrixField spectral_matrix_field(const MultivariateGraphSignal& x,
                                          const MultivariateGraphSignal& y,
                                          const SpectralBasis& b, const EstimatorConfig& cfg);

/// Nearest Hermitian PSD matrix: Hermitian part with negative eigenvalues
/// clipped to zero.
MatC psd_project(const MatC& m);

/// Off-diagonal energy ratio ||offdiag(V^H Sigma_ij V)||_F^2 / ||V^H Sigma_ij V||_F^2
/// for every dimension pair; near zero supports weak stationarity.
MatR stationarity_diagnostic(const MultivariateGraphSignal& x, const SpectralBasis& b);

}  // namespace gccha

#endif
