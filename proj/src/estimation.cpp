#include "gccha/estimation.hpp"
#include "gccha/errors.hpp"
#include "gccha/rng.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace gccha {

namespace {

template <typename Scalar>
void check_near_hermitian(const Mat<Scalar>& j) {
    const double scale = std::max(1.0, j.norm());
    if ((j - j.adjoint()).norm() > 1e-8 * scale)
        throw InvalidInput("spectral matrix is not Hermitian");
}

VecR rademacher_mask(Index n, std::uint64_t seed, std::uint64_t window) {
    VecR mask(n);
    if (window == 0) {
        mask.setOnes();
        return mask;
    }
    std::mt19937_64 rng = substream(seed, window);
    for (Index i = 0; i < n; ++i) mask(i) = (rng() & 1ULL) ? 1.0 : -1.0;
    return mask;
}

/// Accumulates J_l += weight * c c^H over all sample tables produced by the
/// configured estimator, where c is the coefficient row at frequency l.
template <typename Scalar>
std::vector<Mat<Scalar>> accumulate_joint(const Mat<Scalar>& basis_adjoint,
                                          const std::vector<Mat<Scalar>>& tables,
                                          const EstimatorConfig& cfg) {
    const Index n = basis_adjoint.rows();
    const Index dim = tables.front().cols();
    const Index m_count = static_cast<Index>(tables.size());

    Mat<Scalar> mean;
    bool centered = false;
    if (cfg.center && m_count >= 2) {
        mean = Mat<Scalar>::Zero(n, dim);
        for (const auto& t : tables) mean += t;
        mean /= static_cast<double>(m_count);
        centered = true;
    }

    std::vector<Mat<Scalar>> joint(static_cast<size_t>(n), Mat<Scalar>::Zero(dim, dim));
    const Index windows =
        cfg.mode == EstimatorMode::RandomWindow ? static_cast<Index>(cfg.window_count) : 1;
    if (windows < 1) throw InvalidInput("window_count must be >= 1");
    const double denom = static_cast<double>(windows) *
                         static_cast<double>(centered ? m_count - 1 : m_count);
    const double weight = 1.0 / denom;

    Mat<Scalar> table(n, dim);
    Mat<Scalar> coeffs(n, dim);
    for (Index w = 0; w < windows; ++w) {
        Vec<Scalar> mask;
        if (cfg.mode == EstimatorMode::RandomWindow)
            mask = rademacher_mask(n, cfg.seed, static_cast<std::uint64_t>(w)).cast<Scalar>();
        for (Index m = 0; m < m_count; ++m) {
            table = tables[static_cast<size_t>(m)];
            if (centered) table -= mean;
            if (cfg.mode == EstimatorMode::RandomWindow)
                table.array().colwise() *= mask.array();
            coeffs.noalias() = basis_adjoint * table;
            for (Index l = 0; l < n; ++l)
                joint[static_cast<size_t>(l)]
                    .template selfadjointView<Eigen::Lower>()
                    .rankUpdate(coeffs.row(l).transpose(), weight);
        }
    }
    for (auto& j : joint) j = j.template selfadjointView<Eigen::Lower>();
    return joint;
}

/// PSD clip + diagonal loading for one diagonal block, in place.
template <typename Scalar>
void condition_block(Eigen::Ref<Mat<Scalar>> block, double ridge) {
    const Index d = block.rows();
    Eigen::SelfAdjointEigenSolver<Mat<Scalar>> probe;
    probe.compute(block, Eigen::EigenvaluesOnly);
    double min_eig = probe.eigenvalues().minCoeff();
    if (min_eig < 0.0) {
        Eigen::SelfAdjointEigenSolver<Mat<Scalar>> full(block);
        VecR clipped = full.eigenvalues().cwiseMax(0.0);
        block = full.eigenvectors() * clipped.asDiagonal() * full.eigenvectors().adjoint();
        block = block.template selfadjointView<Eigen::Lower>();
        min_eig = 0.0;
    }
    const double level = ridge * block.real().trace() / static_cast<double>(d);
    if (ridge > 0.0 && level > 0.0 && min_eig < level)
        block += level * Mat<Scalar>::Identity(d, d);
}

/// Sliding boxcar average over frequency indices, renormalized at the edges.
template <typename Scalar>
std::vector<Mat<Scalar>> smooth_frequencies(std::vector<Mat<Scalar>> joint, Index bandwidth) {
    const Index n = static_cast<Index>(joint.size());
    if (bandwidth <= 0 || n <= 1) return joint;
    std::vector<Mat<Scalar>> out(joint.size());
    const Index dim = joint.front().rows();
    Mat<Scalar> running = Mat<Scalar>::Zero(dim, dim);
    Index lo = 0, hi = -1;  // current inclusive window [lo, hi]
    for (Index l = 0; l < n; ++l) {
        const Index want_lo = std::max<Index>(0, l - bandwidth);
        const Index want_hi = std::min<Index>(n - 1, l + bandwidth);
        while (hi < want_hi) running += joint[static_cast<size_t>(++hi)];
        while (lo < want_lo) running -= joint[static_cast<size_t>(lo++)];
        out[static_cast<size_t>(l)] = running / static_cast<double>(want_hi - want_lo + 1);
    }
    return out;
}

template <typename Scalar>
std::vector<Mat<Scalar>> build_joint_field(const Mat<Scalar>& basis_adjoint,
                                           const std::vector<Mat<Scalar>>& tables, Index p,
                                           const EstimatorConfig& cfg) {
    std::vector<Mat<Scalar>> joint = smooth_frequencies<Scalar>(
        accumulate_joint<Scalar>(basis_adjoint, tables, cfg), cfg.smoothing_bandwidth);
    const Index dim = joint.front().rows();
    for (auto& j : joint) {
        condition_block<Scalar>(j.topLeftCorner(p, p), cfg.ridge);
        condition_block<Scalar>(j.bottomRightCorner(dim - p, dim - p), cfg.ridge);
    }
    return joint;
}

}  // namespace

SpectralMatrixField::SpectralMatrixField(VecC frequencies, std::vector<MatC> joint, Index x_dim,
                                         Index y_dim)
    : frequencies_(std::move(frequencies)),
      joint_c_(std::move(joint)),
      x_dim_(x_dim),
      y_dim_(y_dim),
      is_real_(false) {
    if (static_cast<Index>(joint_c_.size()) != frequencies_.size())
        throw DimensionMismatch("field: one joint matrix per frequency required");
    for (auto& j : joint_c_) {
        if (j.rows() != x_dim_ + y_dim_ || j.cols() != x_dim_ + y_dim_)
            throw DimensionMismatch("field: joint matrices must be (p+q) x (p+q)");
        check_near_hermitian<Complex>(j);
        j = ((j + j.adjoint()) / 2.0).eval();
    }
}

SpectralMatrixField::SpectralMatrixField(VecC frequencies, std::vector<MatR> joint, Index x_dim,
                                         Index y_dim)
    : frequencies_(std::move(frequencies)),
      joint_r_(std::move(joint)),
      x_dim_(x_dim),
      y_dim_(y_dim),
      is_real_(true) {
    if (static_cast<Index>(joint_r_.size()) != frequencies_.size())
        throw DimensionMismatch("field: one joint matrix per frequency required");
    for (auto& j : joint_r_) {
        if (j.rows() != x_dim_ + y_dim_ || j.cols() != x_dim_ + y_dim_)
            throw DimensionMismatch("field: joint matrices must be (p+q) x (p+q)");
        check_near_hermitian<double>(j);
        j = ((j + j.transpose()) / 2.0).eval();
    }
}

MatC SpectralMatrixField::joint(Index l) const {
    return is_real_ ? joint_real(l).cast<Complex>() : joint_complex(l);
}

MatC SpectralMatrixField::P_X(Index l) const {
    return is_real_ ? MatC(joint_real(l).topLeftCorner(x_dim_, x_dim_).cast<Complex>())
                    : MatC(joint_complex(l).topLeftCorner(x_dim_, x_dim_));
}

MatC SpectralMatrixField::P_Y(Index l) const {
    return is_real_ ? MatC(joint_real(l).bottomRightCorner(y_dim_, y_dim_).cast<Complex>())
                    : MatC(joint_complex(l).bottomRightCorner(y_dim_, y_dim_));
}

MatC SpectralMatrixField::P_XY(Index l) const {
    return is_real_ ? MatC(joint_real(l).topRightCorner(x_dim_, y_dim_).cast<Complex>())
                    : MatC(joint_complex(l).topRightCorner(x_dim_, y_dim_));
}

MatC SpectralMatrixField::P_YX(Index l) const { return P_XY(l).adjoint(); }

VecC cross_periodogram(const SpectralBasis& b, const VecC& x, const VecC& y) {
    if (x.size() != b.size() || y.size() != b.size())
        throw DimensionMismatch("cross_periodogram: signal length must equal node count");
    const VecC cx = b.eigenvectors().adjoint() * x;
    const VecC cy = b.eigenvectors().adjoint() * y;
    return cx.cwiseProduct(cy.conjugate());
}

VecC realization_average_csd(const SpectralBasis& b, const MatC& xi, const MatC& xj,
                             const EstimatorConfig& cfg) {
    if (xi.rows() != b.size() || xj.rows() != b.size())
        throw DimensionMismatch("realization_average_csd: node count mismatch");
    if (xi.cols() != xj.cols())
        throw DimensionMismatch("realization_average_csd: realization count mismatch");
    const Index m_count = xi.cols();
    if (cfg.center && m_count < 2)
        throw TooFewRealizations("centering needs at least 2 realizations");

    MatC ci = b.eigenvectors().adjoint() * xi;  // n x M
    MatC cj = b.eigenvectors().adjoint() * xj;
    if (cfg.center) {
        ci.colwise() -= VecC(ci.rowwise().mean());
        cj.colwise() -= VecC(cj.rowwise().mean());
    }
    const double denom = cfg.center ? static_cast<double>(m_count - 1)
                                    : static_cast<double>(m_count);
    return ci.cwiseProduct(cj.conjugate()).rowwise().sum() / denom;
}

VecC windowed_average_csd(const SpectralBasis& b, const VecC& x, const VecC& y,
                          const EstimatorConfig& cfg) {
    if (x.size() != b.size() || y.size() != b.size())
        throw DimensionMismatch("windowed_average_csd: signal length must equal node count");
    if (cfg.window_count < 1) throw InvalidInput("window_count must be >= 1");
    const Index n = b.size();
    VecC acc = VecC::Zero(n);
    for (int w = 0; w < cfg.window_count; ++w) {
        const VecR mask = rademacher_mask(n, cfg.seed, static_cast<std::uint64_t>(w));
        const VecC cx = b.eigenvectors().adjoint() * x.cwiseProduct(mask.cast<Complex>());
        const VecC cy = b.eigenvectors().adjoint() * y.cwiseProduct(mask.cast<Complex>());
        acc += cx.cwiseProduct(cy.conjugate());
    }
    return acc / static_cast<double>(cfg.window_count);
}

SpectralMatrixField spectral_matrix_field(const MultivariateGraphSignal& x,
                                          const MultivariateGraphSignal& y,
                                          const SpectralBasis& b, const EstimatorConfig& cfg) {
    if (x.node_count() != b.size() || y.node_count() != b.size())
        throw DimensionMismatch("spectral_matrix_field: node count mismatch");
    if (x.realization_count() != y.realization_count())
        throw DimensionMismatch("spectral_matrix_field: realization count mismatch");
    if (cfg.mode == EstimatorMode::RealizationAverage && cfg.center &&
        x.realization_count() < 2)
        throw TooFewRealizations(
            "realization-average centering needs at least 2 realizations");

    const Index m_count = x.realization_count();
    const Index p = x.dimension();

    if (b.is_real() && x.is_real() && y.is_real()) {
        std::vector<MatR> tables;
        tables.reserve(static_cast<size_t>(m_count));
        for (Index m = 0; m < m_count; ++m) {
            MatR t(b.size(), p + y.dimension());
            t << x.realization(m).real(), y.realization(m).real();
            tables.push_back(std::move(t));
        }
        const MatR basis_adjoint = b.real_eigenvectors().transpose();
        return SpectralMatrixField(b.eigenvalues(),
                                   build_joint_field<double>(basis_adjoint, tables, p, cfg), p,
                                   y.dimension());
    }

    std::vector<MatC> tables;
    tables.reserve(static_cast<size_t>(m_count));
    for (Index m = 0; m < m_count; ++m) {
        MatC t(b.size(), p + y.dimension());
        t << x.realization(m), y.realization(m);
        tables.push_back(std::move(t));
    }
    const MatC basis_adjoint = b.eigenvectors().adjoint();
    return SpectralMatrixField(b.eigenvalues(),
                               build_joint_field<Complex>(basis_adjoint, tables, p, cfg), p,
                               y.dimension());
}

MatC psd_project(const MatC& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("psd_project: matrix must be square");
    const MatC herm = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<MatC> solver(herm);
    if (solver.info() != Eigen::Success) throw EigenFailure("psd_project: eigensolver failed");
    const VecR clipped = solver.eigenvalues().cwiseMax(0.0);
    MatC out = solver.eigenvectors() * clipped.asDiagonal() * solver.eigenvectors().adjoint();
    return (out + out.adjoint()) / 2.0;
}

MatR stationarity_diagnostic(const MultivariateGraphSignal& x, const SpectralBasis& b) {
    if (x.node_count() != b.size())
        throw DimensionMismatch("stationarity_diagnostic: node count mismatch");
    const Index m_count = x.realization_count();
    if (m_count < 2) throw TooFewRealizations("stationarity diagnostic needs >= 2 realizations");
    const Index p = x.dimension();
    const Index n = b.size();

    // Coefficients per realization, centered across realizations.
    std::vector<MatC> coeffs;
    coeffs.reserve(static_cast<size_t>(m_count));
    MatC mean = MatC::Zero(n, p);
    for (Index m = 0; m < m_count; ++m) {
        coeffs.push_back(b.eigenvectors().adjoint() * x.realization(m));
        mean += coeffs.back();
    }
    mean /= static_cast<double>(m_count);
    for (auto& c : coeffs) c -= mean;

    // Channel powers first: they set the noise floor below which a pair's
    // cross-spectrum is indistinguishable from zero. A (near-)zero
    // cross-covariance is trivially co-diagonalizable, so such pairs report
    // ratio 0 instead of the ~(1 - 1/n) of pure estimation noise.
    VecR channel_trace(p);
    for (Index i = 0; i < p; ++i) {
        double tr = 0.0;
        for (const auto& c : coeffs) tr += c.col(i).squaredNorm();
        channel_trace(i) = tr / static_cast<double>(m_count - 1);
    }

    MatR ratios = MatR::Zero(p, p);
    MatC t(n, n);
    for (Index i = 0; i < p; ++i) {
        for (Index j = i; j < p; ++j) {
            t.setZero();
            for (const auto& c : coeffs) t.noalias() += c.col(i) * c.col(j).adjoint();
            t /= static_cast<double>(m_count - 1);
            const double total = t.squaredNorm();
            const double diag = t.diagonal().squaredNorm();
            const double floor = 40.0 * channel_trace(i) * channel_trace(j) /
                                 static_cast<double>(m_count - 1);
            const double ratio = total > floor ? (total - diag) / total : 0.0;
            ratios(i, j) = ratio;
            ratios(j, i) = ratio;
        }
    }
    return ratios;
}

}  // namespace gccha
