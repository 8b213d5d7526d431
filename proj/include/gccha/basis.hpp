#ifndef GCCHA_BASIS_HPP
#define GCCHA_BASIS_HPP

#include "gccha/errors.hpp"
#include "gccha/shift.hpp"
#include "gccha/types.hpp"

#include <functional>
#include <string>

namespace gccha {

/// Unitary eigenbasis of a normal GSO, stored in low-to-high frequency
/// order. Column phases follow a fixed convention (largest-magnitude entry
/// real and positive) so repeated runs produce identical bases.
class SpectralBasis {
public:
    SpectralBasis(MatC eigenvectors, VecC eigenvalues, VecR frequency_keys,
                  double shift_frobenius);

    Index size() const { return eigenvalues_.size(); }
    const MatC& eigenvectors() const { return eigenvectors_; }
    const VecC& eigenvalues() const { return eigenvalues_; }
    const VecR& frequency_keys() const { return frequency_keys_; }

    bool is_real() const { return is_real_; }
    /// Only valid when is_real(); V with the imaginary part dropped.
    const MatR& real_eigenvectors() const { return real_eigenvectors_; }

private:
    MatC eigenvectors_;
    VecC eigenvalues_;
    VecR frequency_keys_;
    MatR real_eigenvectors_;
    bool is_real_ = false;
};

/// Eigendecomposition of s with the default frequency ordering: the
/// eigenvalue itself for Laplacian GSOs (ascending), |1 - lambda| otherwise.
SpectralBasis spectral_basis(const ShiftOperator& s);

/// Same, but with user-supplied per-eigenvalue ordering keys. keys[i] must
/// correspond to the i-th eigenvalue of the unordered decomposition as
/// produced by the default ordering's key function; in practice callers pass
/// a function of lambda.
SpectralBasis spectral_basis(const ShiftOperator& s, const std::function<double(Complex)>& key);

/// Discrete total variation of x. Laplacian GSOs use the quadratic form
/// x^H L x; other kinds use the p-Dirichlet form (1/p)||x - Sx||_p^p.
double total_variation(const VecC& x, const ShiftOperator& s, double p = 2.0);

/// V^H x.
template <typename Derived>
MatC gft(const SpectralBasis& b, const Eigen::MatrixBase<Derived>& x) {
    if (x.rows() != b.size())
        throw DimensionMismatch("gft: signal has " + std::to_string(x.rows()) +
                                " rows, basis expects " + std::to_string(b.size()));
    return b.eigenvectors().adjoint() * x.template cast<Complex>();
}

/// V c.
template <typename Derived>
MatC inverse_gft(const SpectralBasis& b, const Eigen::MatrixBase<Derived>& coeffs) {
    if (coeffs.rows() != b.size())
        throw DimensionMismatch("inverse_gft: coefficients have " + std::to_string(coeffs.rows()) +
                                " rows, basis expects " + std::to_string(b.size()));
    return b.eigenvectors() * coeffs.template cast<Complex>();
}

}  // namespace gccha

#endif
