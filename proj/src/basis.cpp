#include "gccha/basis.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace gccha {

namespace {

/// Rotate a column so its largest-magnitude entry is real and positive;
/// the first such entry wins on ties.
void fix_phase(Eigen::Ref<VecC> v) {
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
    const Complex rot = std::conj(v(best)) / best_mag;
    v *= rot;
}

bool lex_less(const VecC& a, const VecC& b) {
    for (Index i = 0; i < a.size(); ++i) {
        if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
        if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
    }
    return false;
}

SpectralBasis assemble(const ShiftOperator& s, MatC vectors, VecC values,
                       const std::function<double(Complex)>& key_fn) {
    const Index n = values.size();
    VecR keys(n);
    for (Index i = 0; i < n; ++i) keys(i) = key_fn(values(i));

    std::vector<Index> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return keys(a) < keys(b); });

    MatC v_sorted(n, n);
    VecC lam_sorted(n);
    VecR keys_sorted(n);
    for (Index i = 0; i < n; ++i) {
        v_sorted.col(i) = vectors.col(order[static_cast<size_t>(i)]);
        lam_sorted(i) = values(order[static_cast<size_t>(i)]);
        keys_sorted(i) = keys(order[static_cast<size_t>(i)]);
    }

    for (Index i = 0; i < n; ++i) fix_phase(v_sorted.col(i));

    // Deterministic ordering inside (near-)degenerate eigenvalue clusters:
    // lexicographic on the phase-fixed entries.
    const double cluster_tol = 1e-9 * s.frobenius_norm();
    Index start = 0;
    while (start < n) {
        Index stop = start + 1;
        while (stop < n && std::abs(lam_sorted(stop) - lam_sorted(stop - 1)) < cluster_tol) ++stop;
        if (stop - start > 1) {
            std::vector<Index> idx(static_cast<size_t>(stop - start));
            std::iota(idx.begin(), idx.end(), start);
            std::stable_sort(idx.begin(), idx.end(), [&](Index a, Index b) {
                return lex_less(v_sorted.col(a), v_sorted.col(b));
            });
            MatC block(n, stop - start);
            VecC lam_block(stop - start);
            VecR key_block(stop - start);
            for (Index j = 0; j < stop - start; ++j) {
                block.col(j) = v_sorted.col(idx[static_cast<size_t>(j)]);
                lam_block(j) = lam_sorted(idx[static_cast<size_t>(j)]);
                key_block(j) = keys_sorted(idx[static_cast<size_t>(j)]);
            }
            v_sorted.middleCols(start, stop - start) = block;
            lam_sorted.segment(start, stop - start) = lam_block;
            keys_sorted.segment(start, stop - start) = key_block;
        }
        start = stop;
    }

    return SpectralBasis(std::move(v_sorted), std::move(lam_sorted), std::move(keys_sorted),
                         s.frobenius_norm());
}

std::function<double(Complex)> default_key(const ShiftOperator& s) {
    if (s.kind() == ShiftKind::Laplacian)
        return [](Complex lam) { return lam.real(); };
    return [](Complex lam) { return std::abs(1.0 - lam); };
}

}  // namespace

SpectralBasis::SpectralBasis(MatC eigenvectors, VecC eigenvalues, VecR frequency_keys,
                             double shift_frobenius)
    : eigenvectors_(std::move(eigenvectors)),
      eigenvalues_(std::move(eigenvalues)),
      frequency_keys_(std::move(frequency_keys)) {
    const Index n = eigenvalues_.size();
    if (eigenvectors_.rows() != n || eigenvectors_.cols() != n || frequency_keys_.size() != n)
        throw InvalidInput("spectral basis: inconsistent sizes");
    // The in-cluster lexicographic reorder may wobble keys by at most the
    // cluster width; both key functions are 1-Lipschitz in the eigenvalue.
    const double key_slack = 1e-9 * shift_frobenius;
    for (Index i = 1; i < n; ++i)
        if (frequency_keys_(i) < frequency_keys_(i - 1) - key_slack)
            throw InvalidInput("spectral basis: frequency keys must be nondecreasing");

    const double unitarity =
        (eigenvectors_.adjoint() * eigenvectors_ - MatC::Identity(n, n)).norm();
    if (unitarity > 1e-10 * std::sqrt(static_cast<double>(n)))
        throw EigenFailure("spectral basis is not unitary: residual " + std::to_string(unitarity));

    is_real_ = is_effectively_real(eigenvectors_) && is_effectively_real(eigenvalues_);
    if (is_real_) real_eigenvectors_ = eigenvectors_.real();
}

SpectralBasis spectral_basis(const ShiftOperator& s) {
    return spectral_basis(s, default_key(s));
}

SpectralBasis spectral_basis(const ShiftOperator& s, const std::function<double(Complex)>& key) {
    const Index n = s.size();
    MatC vectors;
    VecC values;
    if (s.is_real() && (s.real_matrix() - s.real_matrix().transpose()).norm() <=
                           1e-12 * std::max(1.0, s.frobenius_norm())) {
        Eigen::SelfAdjointEigenSolver<MatR> solver(s.real_matrix());
        if (solver.info() != Eigen::Success)
            throw EigenFailure("real symmetric eigendecomposition failed");
        vectors = solver.eigenvectors().cast<Complex>();
        values = solver.eigenvalues().cast<Complex>();
    } else {
        // For a normal matrix the Schur form is diagonal and the Schur
        // vectors are an orthonormal eigenbasis.
        Eigen::ComplexSchur<MatC> schur(s.matrix(), true);
        if (schur.info() != Eigen::Success)
            throw EigenFailure("complex Schur decomposition failed");
        vectors = schur.matrixU();
        values = schur.matrixT().diagonal();
    }

    SpectralBasis b = assemble(s, std::move(vectors), std::move(values), key);

    // Residual check: max_l ||S v_l - lambda_l v_l|| <= 1e-8 ||S||_F.
    const MatC residual =
        s.matrix() * b.eigenvectors() - b.eigenvectors() * b.eigenvalues().asDiagonal();
    const double worst = residual.colwise().norm().maxCoeff();
    if (worst > 1e-8 * std::max(1.0, s.frobenius_norm()))
        throw EigenFailure("eigenpair residual too large: " + std::to_string(worst));
    return b;
}

double total_variation(const VecC& x, const ShiftOperator& s, double p) {
    if (x.size() != s.size())
        throw DimensionMismatch("total_variation: signal length " + std::to_string(x.size()) +
                                " does not match n=" + std::to_string(s.size()));
    if (s.kind() == ShiftKind::Laplacian) {
        const Complex q = x.dot(s.matrix() * x);  // x^H L x
        return q.real();
    }
    if (p <= 0.0) throw InvalidInput("total_variation: norm order must be positive");
    const VecC diff = x - s.matrix() * x;
    double acc = 0.0;
    for (Index i = 0; i < diff.size(); ++i) acc += std::pow(std::abs(diff(i)), p);
    return acc / p;
}

}  // namespace gccha
