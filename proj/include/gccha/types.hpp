#ifndef GCCHA_TYPES_HPP
#define GCCHA_TYPES_HPP

#include <Eigen/Dense>

#include <complex>

namespace gccha {

using Index = Eigen::Index;
using Complex = std::complex<double>;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatC = Mat<Complex>;
using VecC = Vec<Complex>;
using MatR = Mat<double>;
using VecR = Vec<double>;

/// Largest |imaginary part| of any entry, 0 for an empty matrix.
template <typename Derived>
double imag_infinity_norm(const Eigen::MatrixBase<Derived>& m) {
    if (m.size() == 0) return 0.0;
    return m.imag().cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_effectively_real(const Eigen::MatrixBase<Derived>& m, double tol = 0.0) {
    return imag_infinity_norm(m) <= tol;
}

}  // namespace gccha

#endif
