#ifndef GCCHA_LINALG_HPP
#define GCCHA_LINALG_HPP

#include "gccha/errors.hpp"
#include "gccha/types.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>

namespace gccha {

/// Rotate a column so its largest-magnitude entry is real and positive
/// (sign flip in the real case); the lowest index wins ties. Keeps
/// eigenvector output reproducible across runs.
template <typename Scalar>
void fix_phase_column(Eigen::Ref<Vec<Scalar>> v) {
    Index best = 0;
    double best_mag = std::abs(v(0));
    for (Index i = 1; i < v.size(); ++i) {
        double m = std::abs(v(i));
        if (m > best_mag) {
            best_mag = m;
            best = i;
        }
    }
    if (best_mag == 0.0) return;
    if constexpr (Eigen::NumTraits<Scalar>::IsComplex) {
        v *= std::conj(v(best)) / best_mag;
    } else {
        if (v(best) < 0) v = -v;
    }
}

/// Eigendecomposition of a Hermitian PSD spectral matrix with the relative
/// eigenvalue floor floor_rel * tr(P)/dim, backing P^-1, P^-1/2 and P^1/2.
template <typename Scalar>
struct HermitianPsdFactors {
    Mat<Scalar> vectors;
    VecR values;  // floored, all > 0

    Mat<Scalar> inverse() const {
        return vectors * values.cwiseInverse().asDiagonal() * vectors.adjoint();
    }
    Mat<Scalar> inverse_sqrt() const {
        return vectors * values.cwiseSqrt().cwiseInverse().asDiagonal() * vectors.adjoint();
    }
    Mat<Scalar> sqrt() const {
        return vectors * values.cwiseSqrt().asDiagonal() * vectors.adjoint();
    }
};

template <typename Scalar>
HermitianPsdFactors<Scalar> factor_spectral(const Mat<Scalar>& p, double floor_rel) {
    const Index d = p.rows();
    const double trace = p.real().trace();
    if (!std::isfinite(trace) || trace <= 0.0)
        throw SingularSpectralMatrix("spectral matrix has nonpositive or nonfinite trace");
    Eigen::SelfAdjointEigenSolver<Mat<Scalar>> solver(p);
    if (solver.info() != Eigen::Success)
        throw SingularSpectralMatrix("eigendecomposition of spectral matrix failed");
    const double floor = floor_rel * trace / static_cast<double>(d);
    if (floor <= 0.0 && solver.eigenvalues().minCoeff() <= 0.0)
        throw SingularSpectralMatrix("spectral matrix is singular and no floor is in effect");
    HermitianPsdFactors<Scalar> f;
    f.vectors = solver.eigenvectors();
    f.values = solver.eigenvalues().cwiseMax(floor);
    return f;
}

}  // namespace gccha

#endif
