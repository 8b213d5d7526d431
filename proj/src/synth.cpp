#include "gccha/synth.hpp"
#include "gccha/errors.hpp"
#include "gccha/filter.hpp"
#include "gccha/linalg.hpp"
#include "gccha/rng.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace gccha {

namespace {

void check_mean_table(const MatC& means, const SpectralBasis& b, const char* which) {
    if (means.size() == 0) return;
    if (means.rows() != b.size())
        throw DimensionMismatch(std::string("synthesize: ") + which +
                                " mean table has wrong node count");
    for (Index j = 0; j < means.cols(); ++j) {
        const VecC mu = means.col(j);
        const double norm = mu.norm();
        if (norm == 0.0) continue;
        const VecC coeffs = b.eigenvectors().adjoint() * mu;
        Index top;
        coeffs.cwiseAbs().maxCoeff(&top);
        const VecC residual = mu - b.eigenvectors().col(top) * coeffs(top);
        if (residual.norm() > 1e-10 * norm)
            throw MeanNotProportionalToBasisVector(
                std::string(which) + " mean column " + std::to_string(j) +
                " is not proportional to a basis vector");
    }
}

/// Hermitian square roots of every joint matrix; throws on non-PSD input.
template <typename Scalar>
std::vector<Mat<Scalar>> field_roots(const std::vector<Mat<Scalar>>& field) {
    std::vector<Mat<Scalar>> roots;
    roots.reserve(field.size());
    for (size_t l = 0; l < field.size(); ++l) {
        const Mat<Scalar>& j = field[l];
        if ((j - j.adjoint()).norm() > 1e-10 * std::max(1.0, j.norm()))
            throw InvalidField("joint field matrix " + std::to_string(l) + " is not Hermitian");
        Eigen::SelfAdjointEigenSolver<Mat<Scalar>> eig(j);
        if (eig.info() != Eigen::Success)
            throw InvalidField("joint field matrix " + std::to_string(l) +
                               " could not be decomposed");
        const double scale = std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff());
        if (eig.eigenvalues().minCoeff() < -1e-10 * scale)
            throw InvalidField("joint field matrix " + std::to_string(l) + " is not PSD");
        roots.push_back(eig.eigenvectors() *
                        eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
                        eig.eigenvectors().adjoint());
    }
    return roots;
}

}  // namespace

std::pair<MultivariateGraphSignal, MultivariateGraphSignal> synthesize_stationary(
    const SynthesisSpec& spec) {
    const Index n = spec.basis.size();
    const Index dim_total =
        spec.joint_field.empty() ? 0 : spec.joint_field.front().rows();
    if (static_cast<Index>(spec.joint_field.size()) != n)
        throw InvalidField("synthesize: need one joint matrix per frequency");
    if (spec.x_dim < 1 || spec.x_dim >= dim_total)
        throw InvalidInput("synthesize: x_dim must split the joint dimension");
    if (spec.realizations < 1) throw InvalidInput("synthesize: realizations must be >= 1");
    for (const MatC& j : spec.joint_field)
        if (j.rows() != dim_total || j.cols() != dim_total)
            throw InvalidField("synthesize: joint matrices must share one shape");

    check_mean_table(spec.means_x, spec.basis, "X");
    check_mean_table(spec.means_y, spec.basis, "Y");

    const Index p = spec.x_dim;
    const Index q = dim_total - p;

    bool real_path = spec.basis.is_real() && is_effectively_real(spec.means_x) &&
                     is_effectively_real(spec.means_y);
    if (real_path)
        for (const MatC& j : spec.joint_field)
            if (!is_effectively_real(j)) { real_path = false; break; }

    MatC mean_table = MatC::Zero(n, dim_total);
    if (spec.means_x.size() > 0) mean_table.leftCols(p) = spec.means_x;
    if (spec.means_y.size() > 0) mean_table.rightCols(q) = spec.means_y;

    std::vector<MatC> xs;
    std::vector<MatC> ys;
    xs.reserve(static_cast<size_t>(spec.realizations));
    ys.reserve(static_cast<size_t>(spec.realizations));

    if (real_path) {
        std::vector<MatR> field_r;
        field_r.reserve(spec.joint_field.size());
        for (const MatC& j : spec.joint_field) field_r.push_back(j.real());
        const std::vector<MatR> roots = field_roots<double>(field_r);
        const MatR mean_r = mean_table.real();
        for (Index m = 0; m < spec.realizations; ++m) {
            std::mt19937_64 rng = substream(spec.seed, static_cast<std::uint64_t>(m));
            std::normal_distribution<double> gauss(0.0, 1.0);
            MatR coeffs(n, dim_total);
            VecR g(dim_total);
            for (Index l = 0; l < n; ++l) {
                for (Index d = 0; d < dim_total; ++d) g(d) = gauss(rng);
                coeffs.row(l) = (roots[static_cast<size_t>(l)] * g).transpose();
            }
            MatR table = spec.basis.real_eigenvectors() * coeffs + mean_r;
            MatC table_c = table.cast<Complex>();
            xs.push_back(table_c.leftCols(p));
            ys.push_back(table_c.rightCols(q));
        }
    } else {
        const std::vector<MatC> roots = field_roots<Complex>(spec.joint_field);
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        for (Index m = 0; m < spec.realizations; ++m) {
            std::mt19937_64 rng = substream(spec.seed, static_cast<std::uint64_t>(m));
            std::normal_distribution<double> gauss(0.0, 1.0);
            MatC coeffs(n, dim_total);
            VecC g(dim_total);
            for (Index l = 0; l < n; ++l) {
                for (Index d = 0; d < dim_total; ++d) {
                    const double re = gauss(rng);
                    const double im = gauss(rng);
                    g(d) = Complex(re * inv_sqrt2, im * inv_sqrt2);
                }
                coeffs.row(l) = (roots[static_cast<size_t>(l)] * g).transpose();
            }
            MatC table = spec.basis.eigenvectors() * coeffs + mean_table;
            xs.push_back(table.leftCols(p));
            ys.push_back(table.rightCols(q));
        }
    }

    std::vector<std::string> x_labels, y_labels;
    for (Index j = 0; j < p; ++j) x_labels.push_back("x" + std::to_string(j + 1));
    for (Index j = 0; j < q; ++j) y_labels.push_back("y" + std::to_string(j + 1));
    return {MultivariateGraphSignal(std::move(xs), std::move(x_labels)),
            MultivariateGraphSignal(std::move(ys), std::move(y_labels))};
}

namespace {

MatC lu_inverse(const MatC& m, const char* name) {
    Eigen::FullPivLU<MatC> lu(m);
    if (!lu.isInvertible())
        throw SingularInput(std::string("cca_oracle: ") + name + " is singular");
    return lu.inverse();
}

/// Eigenpairs of a general complex matrix sorted by descending real part.
void sorted_general_eig(const MatC& m, VecC& values, MatC& vectors) {
    Eigen::ComplexEigenSolver<MatC> eig(m);
    if (eig.info() != Eigen::Success) throw SingularInput("cca_oracle: eigensolver failed");
    const Index d = m.rows();
    std::vector<Index> order(static_cast<size_t>(d));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
        return eig.eigenvalues()(a).real() > eig.eigenvalues()(b).real();
    });
    values.resize(d);
    vectors.resize(d, d);
    for (Index i = 0; i < d; ++i) {
        values(i) = eig.eigenvalues()(order[static_cast<size_t>(i)]);
        vectors.col(i) = eig.eigenvectors().col(order[static_cast<size_t>(i)]);
    }
}

}  // namespace

CcaOracleResult cca_oracle(const MatC& p_x, const MatC& p_y, const MatC& p_xy) {
    const Index p = p_x.rows();
    const Index q = p_y.rows();
    if (p_x.cols() != p || p_y.cols() != q || p_xy.rows() != p || p_xy.cols() != q)
        throw DimensionMismatch("cca_oracle: inconsistent shapes");
    const MatC p_yx = p_xy.adjoint();
    const MatC x_inv = lu_inverse(p_x, "P_X");
    const MatC y_inv = lu_inverse(p_y, "P_Y");

    const Index r = std::min(p, q);
    CcaOracleResult out;
    out.gamma.resize(r);
    out.h.resize(p, r);
    out.f.resize(q, r);

    VecC hv;
    MatC hvec;
    sorted_general_eig(x_inv * p_xy * y_inv * p_yx, hv, hvec);
    VecC fv;
    MatC fvec;
    sorted_general_eig(y_inv * p_yx * x_inv * p_xy, fv, fvec);

    for (Index i = 0; i < r; ++i) {
        out.gamma(i) = hv(i).real();
        VecC h = hvec.col(i);
        const double hn = std::sqrt(std::abs(Complex(h.dot(p_x * h)).real()));
        if (hn == 0.0) throw SingularInput("cca_oracle: zero-power h direction");
        h /= hn;
        fix_phase_column<Complex>(h);
        out.h.col(i) = h;

        VecC f = fvec.col(i);
        const double fn = std::sqrt(std::abs(Complex(f.dot(p_y * f)).real()));
        if (fn == 0.0) throw SingularInput("cca_oracle: zero-power f direction");
        f /= fn;
        fix_phase_column<Complex>(f);
        out.f.col(i) = f;
    }
    return out;
}

double empirical_mse(const ReducedRankPredictor& pred, const SpectralBasis& b,
                     const MultivariateGraphSignal& x, const MultivariateGraphSignal& y) {
    if (x.realization_count() != y.realization_count())
        throw DimensionMismatch("empirical_mse: realization counts differ");
    if (x.dimension() != pred.a_bank.input_dim() || y.dimension() != pred.a_bank.output_dim())
        throw DimensionMismatch("empirical_mse: predictor does not match signals");
    const Index n = b.size();
    const Index q = y.dimension();
    MatC mu_table = MatC::Zero(n, q);
    for (Index i = 0; i < q; ++i) mu_table.col(i) = pred.mu.at(static_cast<size_t>(i));

    double acc = 0.0;
    for (Index m = 0; m < x.realization_count(); ++m) {
        const MatC yhat = apply_filter_bank(pred.a_bank, x.realization(m), b);
        acc += (y.realization(m) - yhat - mu_table).squaredNorm();
    }
    return acc / static_cast<double>(x.realization_count());
}

}  // namespace gccha
