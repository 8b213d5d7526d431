#include "gccha/solve.hpp"
#include "gccha/errors.hpp"
#include "gccha/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace gccha {

namespace {

/// Threshold below which the mapped h direction is considered numerically
/// zero (gamma ~ 0) and replaced by an orthonormal completion.
constexpr double kDegenerateDirection = 1e-14;

template <typename Scalar>
struct FrequencyVectors {
    VecR coherences;
    Mat<Scalar> h;  // p x r
    Mat<Scalar> f;  // q x r
    VecR tau;
};

inline VecR descending_clamped(const VecR& ascending) {
    VecR out = ascending.reverse();
    return out.cwiseMax(0.0);
}

/// Orthonormal completion in the whitened X coordinates: a unit vector
/// orthogonal to the accepted whitened columns, picked deterministically.
template <typename Scalar>
Vec<Scalar> whitened_completion(const Mat<Scalar>& accepted, Index upto) {
    const Index p = accepted.rows();
    Vec<Scalar> best = Vec<Scalar>::Zero(p);
    double best_norm = -1.0;
    for (Index k = 0; k < p; ++k) {
        Vec<Scalar> cand = Vec<Scalar>::Zero(p);
        cand(k) = Scalar(1);
        for (Index j = 0; j < upto; ++j)
            cand -= accepted.col(j) * (accepted.col(j).dot(cand));
        const double norm = cand.norm();
        if (norm > best_norm + 1e-12) {
            best_norm = norm;
            best = cand;
        }
    }
    if (best_norm <= kDegenerateDirection)
        throw SingularSpectralMatrix("no orthogonal direction available for degenerate pair");
    return best / best.norm();
}

template <typename Scalar>
FrequencyVectors<Scalar> solve_frequency_impl(const Mat<Scalar>& p_x, const Mat<Scalar>& p_y,
                                              const Mat<Scalar>& p_xy, Index r,
                                              const SolveOptions& opts) {
    const Index p = p_x.rows();
    const Index q = p_y.rows();
    if (p_x.cols() != p || p_y.cols() != q)
        throw DimensionMismatch("solve_frequency: spectral matrices must be square");
    if (p_xy.rows() != p || p_xy.cols() != q)
        throw DimensionMismatch("solve_frequency: cross matrix must be p x q");
    if (r < 1 || r > std::min(p, q))
        throw RankTooLarge("solve_frequency: rank " + std::to_string(r) +
                           " exceeds min(p,q) = " + std::to_string(std::min(p, q)));

    const auto fx = factor_spectral<Scalar>(p_x, opts.eig_floor);
    const auto fy = factor_spectral<Scalar>(p_y, opts.eig_floor);
    const Mat<Scalar> x_inv = fx.inverse();
    const Mat<Scalar> y_inv_sqrt = fy.inverse_sqrt();

    const Mat<Scalar> b = p_xy.adjoint() * x_inv * p_xy;  // P_YX P_X^-1 P_XY
    Mat<Scalar> m = y_inv_sqrt * b * y_inv_sqrt;
    m = ((m + m.adjoint()) / 2.0).eval();

    Eigen::SelfAdjointEigenSolver<Mat<Scalar>> eig(m);
    if (eig.info() != Eigen::Success)
        throw SingularSpectralMatrix("solve_frequency: whitened eigenproblem failed");

    FrequencyVectors<Scalar> out;
    out.coherences.resize(r);
    out.h.resize(p, r);
    out.f.resize(q, r);

    Mat<Scalar> whitened_h(p, r);  // accepted P_X^1/2 h_i columns
    const Mat<Scalar> x_sqrt = fx.sqrt();
    for (Index i = 0; i < r; ++i) {
        const Index src = q - 1 - i;  // descending order
        out.coherences(i) = std::max(eig.eigenvalues()(src), 0.0);
        Vec<Scalar> eta = eig.eigenvectors().col(src);
        fix_phase_column<Scalar>(eta);

        Vec<Scalar> f = y_inv_sqrt * eta;
        const double f_norm2 = std::real(Scalar(f.dot(p_y * f)));
        if (!(f_norm2 > 0.0))
            throw SingularSpectralMatrix("solve_frequency: f direction has zero power");
        f /= std::sqrt(f_norm2);
        out.f.col(i) = f;

        Vec<Scalar> h = x_inv * (p_xy * f);
        const double h_norm2 = std::real(Scalar(h.dot(p_x * h)));
        if (h_norm2 > kDegenerateDirection) {
            h /= std::sqrt(h_norm2);
            whitened_h.col(i) = x_sqrt * h;
        } else {
            // gamma ~ 0: any unit-power direction orthogonal to earlier pairs.
            Vec<Scalar> u = whitened_completion<Scalar>(whitened_h, i);
            h = fx.inverse_sqrt() * u;
            fix_phase_column<Scalar>(h);
            const double n2 = std::real(Scalar(h.dot(p_x * h)));
            h /= std::sqrt(n2);
            whitened_h.col(i) = x_sqrt * h;
        }
        out.h.col(i) = h;
    }

    if (opts.with_tau) {
        Mat<Scalar> bh = ((b + b.adjoint()) / 2.0).eval();
        Eigen::SelfAdjointEigenSolver<Mat<Scalar>> tau_eig;
        tau_eig.compute(bh, Eigen::EigenvaluesOnly);
        if (tau_eig.info() != Eigen::Success)
            throw SingularSpectralMatrix("solve_frequency: tau spectrum failed");
        out.tau = descending_clamped(tau_eig.eigenvalues());
    }
    return out;
}

}  // namespace

FrequencySolution solve_frequency(const MatC& p_x, const MatC& p_y, const MatC& p_xy, Index r,
                                  const SolveOptions& opts) {
    FrequencySolution sol;
    if (is_effectively_real(p_x) && is_effectively_real(p_y) && is_effectively_real(p_xy)) {
        auto v = solve_frequency_impl<double>(p_x.real(), p_y.real(), p_xy.real(), r, opts);
        sol.coherences = std::move(v.coherences);
        sol.h_vectors = v.h.cast<Complex>();
        sol.f_vectors = v.f.cast<Complex>();
        sol.tau = std::move(v.tau);
    } else {
        auto v = solve_frequency_impl<Complex>(p_x, p_y, p_xy, r, opts);
        sol.coherences = std::move(v.coherences);
        sol.h_vectors = std::move(v.h);
        sol.f_vectors = std::move(v.f);
        sol.tau = std::move(v.tau);
    }
    return sol;
}

FrequencySolution solve_field_frequency(const SpectralMatrixField& field, Index l, Index r,
                                        const SolveOptions& opts) {
    const Index p = field.x_dim();
    const Index q = field.y_dim();
    FrequencySolution sol;
    if (field.is_real()) {
        const MatR& j = field.joint_real(l);
        auto v = solve_frequency_impl<double>(j.topLeftCorner(p, p), j.bottomRightCorner(q, q),
                                              j.topRightCorner(p, q), r, opts);
        sol.coherences = std::move(v.coherences);
        sol.h_vectors = v.h.cast<Complex>();
        sol.f_vectors = v.f.cast<Complex>();
        sol.tau = std::move(v.tau);
    } else {
        const MatC& j = field.joint_complex(l);
        auto v = solve_frequency_impl<Complex>(j.topLeftCorner(p, p), j.bottomRightCorner(q, q),
                                               j.topRightCorner(p, q), r, opts);
        sol.coherences = std::move(v.coherences);
        sol.h_vectors = std::move(v.h);
        sol.f_vectors = std::move(v.f);
        sol.tau = std::move(v.tau);
    }
    sol.frequency = field.frequencies()(l);
    return sol;
}

namespace {

template <typename Scalar>
void solve_thm32_at(const Mat<Scalar>& p_x, const Mat<Scalar>& p_y, const Mat<Scalar>& p_xy,
                    Index r, const SolveOptions& opts, MatC& h_out, MatC& f_out,
                    Eigen::Ref<VecR> gammas) {
    const auto fx = factor_spectral<Scalar>(p_x, opts.eig_floor);
    const auto fy = factor_spectral<Scalar>(p_y, opts.eig_floor);
    const Mat<Scalar> xis = fx.inverse_sqrt();
    const Mat<Scalar> yis = fy.inverse_sqrt();
    const Mat<Scalar> k = xis * p_xy * yis;

    Eigen::JacobiSVD<Mat<Scalar>> svd(k, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Mat<Scalar> u = svd.matrixU().leftCols(r);
    Mat<Scalar> v = svd.matrixV().leftCols(r);
    for (Index i = 0; i < r; ++i) {
        fix_phase_column<Scalar>(u.col(i));
        fix_phase_column<Scalar>(v.col(i));
        gammas(i) = svd.singularValues()(i) * svd.singularValues()(i);
    }
    h_out = (u.adjoint() * xis).template cast<Complex>();
    f_out = (v.adjoint() * yis).template cast<Complex>();
}

}  // namespace

Thm32Solution solve_thm32(const SpectralMatrixField& field, Index r, const SolveOptions& opts) {
    const Index p = field.x_dim();
    const Index q = field.y_dim();
    if (r < 1 || r > std::min(p, q)) throw RankTooLarge("solve_thm32: invalid rank");
    const Index n = field.frequency_count();

    std::vector<MatC> h(static_cast<size_t>(n));
    std::vector<MatC> f(static_cast<size_t>(n));
    MatR gammas(r, n);
    for (Index l = 0; l < n; ++l) {
        if (field.is_real()) {
            const MatR& j = field.joint_real(l);
            solve_thm32_at<double>(j.topLeftCorner(p, p), j.bottomRightCorner(q, q),
                                   j.topRightCorner(p, q), r, opts, h[static_cast<size_t>(l)],
                                   f[static_cast<size_t>(l)], gammas.col(l));
        } else {
            const MatC& j = field.joint_complex(l);
            solve_thm32_at<Complex>(j.topLeftCorner(p, p), j.bottomRightCorner(q, q),
                                    j.topRightCorner(p, q), r, opts, h[static_cast<size_t>(l)],
                                    f[static_cast<size_t>(l)], gammas.col(l));
        }
    }
    return Thm32Solution{FilterBank(std::move(h)), FilterBank(std::move(f)), std::move(gammas)};
}

namespace {

template <typename Scalar>
void reduced_rank_at(const Mat<Scalar>& p_x, const Mat<Scalar>& p_y, const Mat<Scalar>& p_xy,
                     Index r, bool weighted, const SolveOptions& opts, MatC& a_out, MatC& g_out,
                     MatC& h_out, double& criterion) {
    const Index q = p_y.rows();
    const auto fx = factor_spectral<Scalar>(p_x, opts.eig_floor);
    const Mat<Scalar> x_inv = fx.inverse();
    const Mat<Scalar> b = p_xy.adjoint() * x_inv * p_xy;  // P_YX P_X^-1 P_XY

    if (!weighted) {
        Mat<Scalar> bh = ((b + b.adjoint()) / 2.0).eval();
        Eigen::SelfAdjointEigenSolver<Mat<Scalar>> eig(bh);
        if (eig.info() != Eigen::Success)
            throw SingularSpectralMatrix("reduced_rank: eigenproblem failed");
        Mat<Scalar> g(q, r);
        for (Index i = 0; i < r; ++i) {
            Vec<Scalar> u = eig.eigenvectors().col(q - 1 - i);
            fix_phase_column<Scalar>(u);
            g.col(i) = u;
        }
        const Mat<Scalar> h = g.adjoint() * (p_xy.adjoint() * x_inv);
        const Mat<Scalar> a = g * h;
        criterion = std::real(Scalar(p_y.trace())) - std::real(Scalar(bh.trace()));
        const VecR tau = descending_clamped(eig.eigenvalues());
        for (Index i = r; i < q; ++i) criterion += tau(i);
        a_out = a.template cast<Complex>();
        g_out = g.template cast<Complex>();
        h_out = h.template cast<Complex>();
        return;
    }

    const auto fy = factor_spectral<Scalar>(p_y, opts.eig_floor);
    const Mat<Scalar> w = fy.inverse_sqrt();
    Mat<Scalar> m = w * b * w;
    m = ((m + m.adjoint()) / 2.0).eval();
    Eigen::SelfAdjointEigenSolver<Mat<Scalar>> eig(m);
    if (eig.info() != Eigen::Success)
        throw SingularSpectralMatrix("reduced_rank: weighted eigenproblem failed");
    Mat<Scalar> g_tilde(q, r);
    criterion = static_cast<double>(q);
    for (Index i = 0; i < r; ++i) {
        Vec<Scalar> eta = eig.eigenvectors().col(q - 1 - i);
        fix_phase_column<Scalar>(eta);
        g_tilde.col(i) = eta;
        criterion -= std::max(eig.eigenvalues()(q - 1 - i), 0.0);
    }
    const Mat<Scalar> g = fy.sqrt() * g_tilde;
    const Mat<Scalar> h = g_tilde.adjoint() * w * (p_xy.adjoint() * x_inv);
    const Mat<Scalar> a = g * h;
    a_out = a.template cast<Complex>();
    g_out = g.template cast<Complex>();
    h_out = h.template cast<Complex>();
}

}  // namespace

ReducedRankPredictor reduced_rank_predictor(const SpectralMatrixField& field,
                                            const SpectralBasis& b, const MatC& means_x,
                                            const MatC& means_y, Index r, bool weighted,
                                            const SolveOptions& opts) {
    const Index p = field.x_dim();
    const Index q = field.y_dim();
    const Index n = field.frequency_count();
    if (n != b.size())
        throw DimensionMismatch("reduced_rank_predictor: field and basis disagree on n");
    if (r < 1 || r > std::min(p, q)) throw RankTooLarge("reduced_rank_predictor: invalid rank");

    std::vector<MatC> a(static_cast<size_t>(n));
    std::vector<MatC> g(static_cast<size_t>(n));
    std::vector<MatC> h(static_cast<size_t>(n));
    double min_mse = 0.0;
    for (Index l = 0; l < n; ++l) {
        double c = 0.0;
        if (field.is_real()) {
            const MatR& j = field.joint_real(l);
            reduced_rank_at<double>(j.topLeftCorner(p, p), j.bottomRightCorner(q, q),
                                    j.topRightCorner(p, q), r, weighted, opts,
                                    a[static_cast<size_t>(l)], g[static_cast<size_t>(l)],
                                    h[static_cast<size_t>(l)], c);
        } else {
            const MatC& j = field.joint_complex(l);
            reduced_rank_at<Complex>(j.topLeftCorner(p, p), j.bottomRightCorner(q, q),
                                     j.topRightCorner(p, q), r, weighted, opts,
                                     a[static_cast<size_t>(l)], g[static_cast<size_t>(l)],
                                     h[static_cast<size_t>(l)], c);
        }
        min_mse += c;
    }

    ReducedRankPredictor pred{FilterBank(std::move(a)), FilterBank(std::move(g)),
                              FilterBank(std::move(h)), {}, min_mse, weighted};

    pred.mu.assign(static_cast<size_t>(q), VecC::Zero(n));
    const bool have_means = means_x.size() > 0 || means_y.size() > 0;
    if (have_means) {
        MatC mx = means_x.size() > 0 ? means_x : MatC::Zero(n, p);
        MatC my = means_y.size() > 0 ? means_y : MatC::Zero(n, q);
        if (mx.rows() != n || mx.cols() != p || my.rows() != n || my.cols() != q)
            throw DimensionMismatch("reduced_rank_predictor: mean tables have wrong shape");
        const MatC filtered = apply_filter_bank(pred.a_bank, mx, b);
        for (Index i = 0; i < q; ++i) pred.mu[static_cast<size_t>(i)] = my.col(i) - filtered.col(i);
    }
    return pred;
}

}  // namespace gccha
